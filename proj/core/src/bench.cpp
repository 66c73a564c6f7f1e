// Copyright 2026 The apfrrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "apfrrt/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/students_t.hpp>
#include <fmt/format.h>

namespace apfrrt {
namespace {

double sample_variance(std::span<const double> v, double mean) {
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return ss / static_cast<double>(v.size() - 1);
}

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

void ExperimentSpec::validate() const {
  if (!environment) throw std::invalid_argument("experiment needs an environment");
  if (trials < 2) throw std::invalid_argument("experiment needs at least 2 trials");
  if (algorithms.empty()) throw std::invalid_argument("experiment needs at least one algorithm");
  for (const auto& a : algorithms) {
    a.params.validate();
    if (a.params.checkpoints != algorithms.front().params.checkpoints) {
      throw std::invalid_argument("all algorithms must share the same checkpoints");
    }
  }
}

std::vector<AlgorithmRuns> run_experiment(const ExperimentSpec& spec, RunOptions options) {
  spec.validate();

  const std::size_t n_alg = spec.algorithms.size();
  const auto n_trials = static_cast<std::size_t>(spec.trials);
  std::vector<AlgorithmRuns> out(n_alg);
  for (std::size_t a = 0; a < n_alg; ++a) {
    out[a].label = spec.algorithms[a].label;
    out[a].trials.resize(n_trials);
  }

  const std::size_t jobs = n_alg * n_trials;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const std::size_t a = job / n_trials;
      const std::size_t t = job % n_trials;
      try {
        PlannerParams params = spec.algorithms[a].params;
        params.rng_seed = spec.base_seed + t;
        Planner planner(spec.environment, params);
        TrialRecord rec;
        rec.trial = static_cast<int>(t);
        rec.result = planner.plan();
        rec.tree_violations = validate_tree(*spec.environment, planner.tree()).size();
        out[a].trials[t] = std::move(rec);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::optional<SampleSummary> summarize(std::span<const double> values) {
  if (values.size() < 2) return std::nullopt;
  const double m = mean_of(values);
  const double var = sample_variance(values, m);
  return SampleSummary{m, std::sqrt(var / static_cast<double>(values.size()))};
}

std::vector<double> checkpoint_costs(const AlgorithmRuns& runs, int iteration) {
  std::vector<double> out;
  for (const auto& t : runs.trials) {
    for (const auto& c : t.result.checkpoint_costs) {
      if (c.iteration == iteration && c.cost) out.push_back(*c.cost);
    }
  }
  return out;
}

std::vector<AggregateRow> aggregate(std::span<const AlgorithmRuns> runs) {
  std::vector<AggregateRow> rows;
  for (const auto& alg : runs) {
    AggregateRow row;
    row.label = alg.label;
    row.trials = static_cast<int>(alg.trials.size());
    if (!alg.trials.empty()) {
      for (const auto& c : alg.trials.front().result.checkpoint_costs) {
        const std::vector<double> costs = checkpoint_costs(alg, c.iteration);
        CellStats cell;
        cell.iteration = c.iteration;
        cell.solved = static_cast<int>(costs.size());
        cell.solve_rate = static_cast<double>(costs.size()) / static_cast<double>(row.trials);
        if (auto s = summarize(costs)) {
          cell.mean = s->mean;
          cell.standard_error = s->standard_error;
        }
        row.cells.push_back(cell);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

TTestReport welch_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw std::invalid_argument("welch_t_test needs at least two values per sample");
  }
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double ma = mean_of(a);
  const double mb = mean_of(b);
  const double va = sample_variance(a, ma) / na;
  const double vb = sample_variance(b, mb) / nb;

  TTestReport r;
  if (va + vb == 0.0) {
    r.df = na + nb - 2.0;
    if (ma == mb) {
      r.t = 0.0;
      r.p = 1.0;
    } else {
      r.t = ma > mb ? std::numeric_limits<double>::infinity()
                    : -std::numeric_limits<double>::infinity();
      r.p = 0.0;
    }
    return r;
  }

  r.t = (ma - mb) / std::sqrt(va + vb);
  r.df = (va + vb) * (va + vb) / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
  const boost::math::students_t dist(r.df);
  r.p = std::clamp(2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(r.t))), 0.0, 1.0);
  return r;
}

std::string format_cell(const CellStats& cell) {
  if (!cell.mean || !cell.standard_error) return "—";
  return fmt::format("{:.2f} ({:.2f})", *cell.mean, *cell.standard_error);
}

std::string emit_table(std::span<const AggregateRow> rows, std::span<const TTestReport> tests) {
  if (rows.empty()) throw std::invalid_argument("emit_table needs at least one row");

  std::vector<std::string> header{"Algorithm"};
  for (const auto& c : rows.front().cells) header.push_back(fmt::format("{} iterations", c.iteration));

  std::vector<std::vector<std::string>> body;
  for (const auto& row : rows) {
    std::vector<std::string> line{row.label};
    for (const auto& c : row.cells) line.push_back(format_cell(c));
    body.push_back(std::move(line));
    std::vector<std::string> solved{""};
    for (const auto& c : row.cells) solved.push_back(fmt::format("solved {}/{}", c.solved, row.trials));
    body.push_back(std::move(solved));
  }

  // Display width in code points so the em dash lines up.
  auto width = [](const std::string& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
  };
  std::vector<std::size_t> widths(header.size(), 0);
  auto fit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], width(line[i]));
  };
  fit(header);
  for (const auto& l : body) fit(l);

  auto render = [&](const std::vector<std::string>& line) {
    std::string s;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) s += " | ";
      s += line[i];
      if (i + 1 < line.size()) s.append(widths[i] - width(line[i]), ' ');
    }
    return s + "\n";
  };

  std::string out = render(header);
  std::size_t rule = 0;
  for (std::size_t w : widths) rule += w;
  out += std::string(rule + 3 * (widths.size() - 1), '-') + "\n";
  for (const auto& l : body) out += render(l);
  out += "Mean cost (standard error) over solved trials.\n";

  if (!tests.empty()) {
    out += "\nWelch two-tailed t-tests:\n";
    for (const auto& t : tests) {
      out += fmt::format("  {} vs {} @ {}: t({:.2f}) = {:.2f}, p = {:.3g}\n", t.label_a,
                         t.label_b, t.iteration, t.df, t.t, t.p);
    }
  }
  return out;
}

std::string emit_table_csv(std::span<const AggregateRow> rows) {
  std::string out = "algorithm,iteration,mean,standard_error,solved,trials,solve_rate\n";
  for (const auto& row : rows) {
    for (const auto& c : row.cells) {
      out += fmt::format("{},{},{},{},{},{},{}\n", row.label, c.iteration,
                         c.mean ? fmt::format("{}", *c.mean) : "",
                         c.standard_error ? fmt::format("{}", *c.standard_error) : "", c.solved,
                         row.trials, c.solve_rate);
    }
  }
  return out;
}

std::string emit_ttests_csv(std::span<const TTestReport> tests) {
  std::string out = "label_a,label_b,iteration,t,df,p\n";
  for (const auto& t : tests) {
    out += fmt::format("{},{},{},{},{},{}\n", t.label_a, t.label_b, t.iteration, t.t, t.df, t.p);
  }
  return out;
}

}  // namespace apfrrt
