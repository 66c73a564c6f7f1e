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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "apfrrt/bench.hpp"
#include "apfrrt/planner.hpp"
#include "apfrrt/scenario.hpp"

namespace apfrrt::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNoSolution = 2,
  kConfigError = 3,
  kIoError = 4,
};

struct PlanOptions {
  std::string scenario;
  std::string profile;
  std::uint64_t seed = 0;
  /// Directory for the run record; empty skips it.
  std::string out_dir;
  std::optional<std::string> svg;
  std::string layers = "world,tree,path";
  int canvas = 800;
};

struct BenchOptions {
  std::string scenario;
  std::string out_dir;
  unsigned threads = 0;
  /// Overrides the experiment block.
  std::optional<int> trials;
  std::optional<std::uint64_t> base_seed;
};

struct RenderOptions {
  std::string scenario;
  /// Without a profile only the world is drawn.
  std::optional<std::string> profile;
  std::uint64_t seed = 0;
  std::string svg;
  std::string layers = "world,tree,path";
  int canvas = 800;
};

/// JSON run record of one plan.
nlohmann::ordered_json run_record(const std::string& scenario, const std::string& profile,
                                  const PlanResult& result, std::size_t tree_violations);

/// t-tests of the reference profile against every other profile at every
/// checkpoint where both have at least two solved trials.
std::vector<TTestReport> reference_ttests(std::span<const AlgorithmRuns> runs,
                                          const std::string& reference);

int cmd_plan(const PlanOptions& options, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);
int cmd_render(const RenderOptions& options, std::ostream& out, std::ostream& err);
int cmd_validate_scenario(const std::string& path, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, char** argv);

}  // namespace apfrrt::cli
