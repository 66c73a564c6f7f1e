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

#include "apfrrt/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <system_error>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "apfrrt/svg.hpp"
#include "apfrrt/tree.hpp"

namespace apfrrt::cli {
namespace fs = std::filesystem;
namespace {

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw std::system_error(ec, "cannot create " + path.parent_path().string());
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::system_error(std::make_error_code(std::errc::io_error),
                                  "cannot write " + path.string());
  f << text;
  f.close();
  if (!f) throw std::system_error(std::make_error_code(std::errc::io_error),
                                  "cannot write " + path.string());
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ScenarioError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::out_of_range& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::system_error& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  }
}

nlohmann::ordered_json config_json(const Config& q) {
  auto a = nlohmann::ordered_json::array();
  for (double v : q) a.push_back(v);
  return a;
}

std::string scenario_label(const ScenarioFile& s, const std::string& path) {
  return s.name.empty() ? fs::path(path).stem().string() : s.name;
}

}  // namespace

nlohmann::ordered_json run_record(const std::string& scenario, const std::string& profile,
                                  const PlanResult& result, std::size_t tree_violations) {
  nlohmann::ordered_json j;
  j["scenario"] = scenario;
  j["profile"] = profile;
  j["seed"] = result.rng_seed;
  j["solved"] = result.solved();
  if (result.path) {
    auto path = nlohmann::ordered_json::array();
    for (const Config& q : *result.path) path.push_back(config_json(q));
    j["path"] = path;
    j["path_length"] = result.path_length;
    j["n_collision"] = result.n_collision;
    j["total_cost"] = result.total_cost;
  } else {
    j["path"] = nullptr;
    j["path_length"] = nullptr;
    j["n_collision"] = nullptr;
    j["total_cost"] = nullptr;
  }
  auto cps = nlohmann::ordered_json::array();
  for (const auto& c : result.checkpoint_costs) {
    nlohmann::ordered_json cj;
    cj["iteration"] = c.iteration;
    cj["cost"] = c.cost ? nlohmann::ordered_json(*c.cost) : nlohmann::ordered_json(nullptr);
    cps.push_back(cj);
  }
  j["checkpoints"] = cps;
  j["tree_size"] = result.tree_size;
  j["tree_violations"] = tree_violations;
  return j;
}

std::vector<TTestReport> reference_ttests(std::span<const AlgorithmRuns> runs,
                                          const std::string& reference) {
  std::vector<TTestReport> out;
  const AlgorithmRuns* ref = nullptr;
  for (const auto& r : runs) {
    if (r.label == reference) ref = &r;
  }
  if (!ref || ref->trials.empty()) return out;
  for (const auto& other : runs) {
    if (&other == ref) continue;
    for (const auto& c : ref->trials.front().result.checkpoint_costs) {
      const auto a = checkpoint_costs(*ref, c.iteration);
      const auto b = checkpoint_costs(other, c.iteration);
      if (a.size() < 2 || b.size() < 2) continue;
      TTestReport t = welch_t_test(a, b);
      t.label_a = ref->label;
      t.label_b = other.label;
      t.iteration = c.iteration;
      out.push_back(std::move(t));
    }
  }
  return out;
}

int cmd_plan(const PlanOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScenarioFile s = load_scenario(o.scenario);
    const auto env = build_environment(s);
    const PlannerParams params = build_planner_params(s, o.profile, *env, o.seed);
    RenderSpec spec;
    spec.width = spec.height = o.canvas;
    set_layers(spec, o.layers);
    spec.validate();

    Planner planner(env, params);
    const PlanResult result = planner.plan();
    const std::size_t violations = validate_tree(*env, planner.tree()).size();
    const std::string label = scenario_label(s, o.scenario);

    if (!o.out_dir.empty()) {
      const auto record = run_record(label, o.profile, result, violations);
      write_file(fs::path(o.out_dir) / fmt::format("{}_{}_seed{}.json", label, o.profile, o.seed),
                 record.dump(2) + "\n");
    }
    if (o.svg) {
      const PotentialParams* potential = nullptr;
      PotentialParams resolved = s.potential;
      if (const auto* nb = std::get_if<NearestNodeBias>(&params.strategy)) resolved = nb->potential;
      if (const auto* sb = std::get_if<SampleBias>(&params.strategy)) resolved = sb->potential;
      if (spec.quiver) potential = &resolved;
      write_file(*o.svg, render_svg(*env, &planner.tree(), result.path, potential, spec));
    }

    if (!result.solved()) {
      out << fmt::format("{} / {} seed {}: no solution ({} nodes)\n", label, o.profile, o.seed,
                         result.tree_size);
      return static_cast<int>(kNoSolution);
    }
    out << fmt::format(
        "{} / {} seed {}: total_cost {:.3f} path_length {:.3f} n_collision {} ({} nodes)\n", label,
        o.profile, o.seed, result.total_cost, result.path_length, result.n_collision,
        result.tree_size);
    return static_cast<int>(kSuccess);
  });
}

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ScenarioFile s = load_scenario(o.scenario);
    if (!s.experiment) throw ScenarioError(0, "scenario has no [experiment] section");
    if (o.trials) s.experiment->trials = *o.trials;
    if (o.base_seed) s.experiment->base_seed = *o.base_seed;
    const auto env = build_environment(s);
    const ExperimentSpec spec = build_experiment(s, env);
    const std::string label = scenario_label(s, o.scenario);

    const auto runs = run_experiment(spec, RunOptions{o.threads});
    const fs::path dir(o.out_dir);
    for (const auto& alg : runs) {
      for (const auto& t : alg.trials) {
        const auto record = run_record(label, alg.label, t.result, t.tree_violations);
        write_file(dir / "runs" / alg.label / fmt::format("trial_{:04d}.json", t.trial),
                   record.dump(2) + "\n");
      }
    }
    const auto rows = aggregate(runs);
    const auto tests = reference_ttests(runs, s.experiment->reference);
    const std::string table = emit_table(rows, tests);
    write_file(dir / "table.txt", table);
    write_file(dir / "table.csv", emit_table_csv(rows));
    write_file(dir / "ttests.csv", emit_ttests_csv(tests));

    nlohmann::ordered_json meta;
    meta["scenario"] = label;
    meta["trials"] = spec.trials;
    meta["base_seed"] = spec.base_seed;
    meta["seeding"] = "paired: trial i of every profile uses base_seed + i";
    meta["reference"] = s.experiment->reference;
    meta["checkpoints"] = s.experiment->checkpoints;
    auto profiles = nlohmann::ordered_json::array();
    for (const auto& p : s.profiles) profiles.push_back(p.name);
    meta["profiles"] = profiles;
    write_file(dir / "experiment.json", meta.dump(2) + "\n");

    out << table;
    return static_cast<int>(kSuccess);
  });
}

int cmd_render(const RenderOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScenarioFile s = load_scenario(o.scenario);
    const auto env = build_environment(s);
    RenderSpec spec;
    spec.width = spec.height = o.canvas;
    set_layers(spec, o.layers);
    spec.output_path = o.svg;
    spec.validate();

    std::string svg;
    if (o.profile) {
      const PlannerParams params = build_planner_params(s, *o.profile, *env, o.seed);
      Planner planner(env, params);
      const PlanResult result = planner.plan();
      const PotentialParams potential = with_attractive_scale(s.potential, *env);
      svg = render_svg(*env, &planner.tree(), result.path, &potential, spec);
    } else {
      const PotentialParams potential = with_attractive_scale(s.potential, *env);
      svg = render_svg(*env, nullptr, std::nullopt, &potential, spec);
    }
    write_file(o.svg, svg);
    out << "wrote " << o.svg << "\n";
    return static_cast<int>(kSuccess);
  });
}

int cmd_validate_scenario(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScenarioFile s = load_scenario(path);
    out << fmt::format("{}: ok ({}, {} obstacles, {} profiles{})\n", path,
                       s.kind == EnvironmentKind::kPoint2d ? "point2d" : "planar_arm",
                       s.obstacles.size(), s.profiles.size(),
                       s.experiment ? ", experiment" : "");
    return static_cast<int>(kSuccess);
  });
}

int run(int argc, char** argv) {
  CLI::App app{"Cost-based potential-biased RRT* planner"};
  app.require_subcommand(1);

  PlanOptions plan;
  auto* plan_cmd = app.add_subcommand("plan", "Run one plan and write its record");
  plan_cmd->add_option("--scenario", plan.scenario, "Scenario file")->required();
  plan_cmd->add_option("--profile", plan.profile, "Algorithm profile")->required();
  plan_cmd->add_option("--seed", plan.seed, "RNG seed");
  plan_cmd->add_option("--out", plan.out_dir, "Directory for the run record");
  plan_cmd->add_option("--svg", plan.svg, "Write an SVG rendering");
  plan_cmd->add_option("--layers", plan.layers, "Comma-separated world,tree,path,quiver");
  plan_cmd->add_option("--canvas", plan.canvas, "Canvas size in pixels");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run the experiment block");
  bench_cmd->add_option("--scenario", bench.scenario, "Scenario file")->required();
  bench_cmd->add_option("--out", bench.out_dir, "Output directory")->required();
  bench_cmd->add_option("--threads", bench.threads, "Worker threads (0 = all cores)");
  bench_cmd->add_option("--trials", bench.trials, "Override the trial count");
  bench_cmd->add_option("--seed", bench.base_seed, "Override the base seed");

  RenderOptions render;
  auto* render_cmd = app.add_subcommand("render", "Render a scenario, optionally with a plan");
  render_cmd->add_option("--scenario", render.scenario, "Scenario file")->required();
  render_cmd->add_option("--svg", render.svg, "Output SVG path")->required();
  render_cmd->add_option("--profile", render.profile, "Plan with this profile first");
  render_cmd->add_option("--seed", render.seed, "RNG seed");
  render_cmd->add_option("--layers", render.layers, "Comma-separated world,tree,path,quiver");
  render_cmd->add_option("--canvas", render.canvas, "Canvas size in pixels");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate-scenario", "Parse and check a scenario");
  validate_cmd->add_option("--scenario", validate_path, "Scenario file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  if (*plan_cmd) return cmd_plan(plan, std::cout, std::cerr);
  if (*bench_cmd) return cmd_bench(bench, std::cout, std::cerr);
  if (*render_cmd) return cmd_render(render, std::cout, std::cerr);
  return cmd_validate_scenario(validate_path, std::cout, std::cerr);
}

}  // namespace apfrrt::cli
