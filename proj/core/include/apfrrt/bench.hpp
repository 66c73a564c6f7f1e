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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apfrrt/environment.hpp"
#include "apfrrt/planner.hpp"

namespace apfrrt {

struct AlgorithmSpec {
  std::string label;
  PlannerParams params;
};

struct ExperimentSpec {
  std::shared_ptr<const CSpaceEnvironment> environment;
  std::vector<AlgorithmSpec> algorithms;
  int trials = 100;
  std::uint64_t base_seed = 0;

  /// trials >= 2, at least one algorithm, identical checkpoints everywhere.
  void validate() const;
};

/// One finished trial: the plan result plus the validate_tree verdict on the
/// final tree.
struct TrialRecord {
  int trial = 0;
  PlanResult result;
  std::size_t tree_violations = 0;
};

struct AlgorithmRuns {
  std::string label;
  std::vector<TrialRecord> trials;
};

struct RunOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Runs every algorithm for every trial. Trial i of every algorithm uses seed
/// base_seed + i. Output is ordered by algorithm, then trial index,
/// independently of the thread count.
std::vector<AlgorithmRuns> run_experiment(const ExperimentSpec& spec, RunOptions options = {});

struct CellStats {
  int iteration = 0;
  /// Present when at least two trials were solved at this checkpoint.
  std::optional<double> mean;
  std::optional<double> standard_error;
  double solve_rate = 0.0;
  int solved = 0;
};

struct AggregateRow {
  std::string label;
  std::vector<CellStats> cells;
  int trials = 0;
};

/// Mean and standard error (sample stddev / sqrt(n)) over solved trials.
struct SampleSummary {
  double mean = 0.0;
  double standard_error = 0.0;
};
std::optional<SampleSummary> summarize(std::span<const double> values);

std::vector<AggregateRow> aggregate(std::span<const AlgorithmRuns> runs);

/// Solved costs of one algorithm at one checkpoint.
std::vector<double> checkpoint_costs(const AlgorithmRuns& runs, int iteration);

struct TTestReport {
  std::string label_a;
  std::string label_b;
  int iteration = 0;
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;
};

/// Welch's unequal-variance two-sample t-test with Welch-Satterthwaite
/// degrees of freedom and a two-tailed p-value. When both samples have zero
/// variance the result is t = 0, p = 1 for equal means and t = +/-inf, p = 0
/// otherwise, with df = n_a + n_b - 2. Throws std::invalid_argument when a
/// sample has fewer than two values.
TTestReport welch_t_test(std::span<const double> a, std::span<const double> b);

/// "971.19 (8.53)" or an em dash for an undefined cell.
std::string format_cell(const CellStats& cell);

/// Human-readable table: one row per algorithm in declaration order, one
/// column per checkpoint, followed by the t-test lines.
std::string emit_table(std::span<const AggregateRow> rows, std::span<const TTestReport> tests);

/// Machine-readable CSV of the same rows.
std::string emit_table_csv(std::span<const AggregateRow> rows);

/// CSV of t-test reports.
std::string emit_ttests_csv(std::span<const TTestReport> tests);

}  // namespace apfrrt
