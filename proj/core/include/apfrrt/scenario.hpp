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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "apfrrt/bench.hpp"
#include "apfrrt/environment.hpp"
#include "apfrrt/geometry.hpp"
#include "apfrrt/planner.hpp"
#include "apfrrt/potential.hpp"

namespace apfrrt {

// Scenario files are sectioned key-value text:
//
//   # comment
//   [environment]
//   kind = point2d            # or planar_arm
//   bounds = 0 0 100 100      # xmin ymin xmax ymax (workspace)
//   start = 10 50
//   goal = 90 50
//
//   [obstacle]                # repeatable
//   shape = rect              # rect: min, max; circle: center, radius
//   min = 45 10
//   max = 55 90
//   permeability = permeable  # or impermeable (no cost key)
//   cost = 100
//
//   [arm]                     # planar_arm only
//   links = 1.0 0.8 0.6
//   base = 0 0
//   joint_limits = lo hi lo hi lo hi
//   samples_per_link = 8
//   goal_pose = x y
//
//   [potential]   k_att k_rep_perm k_rep_imp d_obs_star beta
//   [planner]     max_iterations delta [neighbor_radius goal_radius
//                 edge_check_resolution]
//   [profile NAME] strategy = none | nearest_node_bias | sample_bias,
//                 optional potential overrides, step/steps for sample_bias
//   [experiment]  trials base_seed checkpoints reference
//
// Keys match exactly; unknown or repeated keys are errors.

/// Parse or validation failure anchored at a 1-based line (0 = whole file).
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

enum class EnvironmentKind { kPoint2d, kPlanarArm };

enum class StrategyKind { kNone, kNearestNodeBias, kSampleBias };

struct ArmSpec {
  std::vector<double> links;
  Point2 base;
  std::vector<Interval> joint_limits;
  int samples_per_link = 8;
  Point2 goal_pose;
  friend bool operator==(const ArmSpec&, const ArmSpec&) = default;
};

struct PlannerSettings {
  int max_iterations = 5000;
  double delta = 3.0;
  double neighbor_radius = 3.0;
  double goal_radius = 3.0;
  double edge_check_resolution = 0.3;
  friend bool operator==(const PlannerSettings&, const PlannerSettings&) = default;
};

struct ProfileSpec {
  std::string name;
  StrategyKind strategy = StrategyKind::kNone;
  std::optional<double> k_att;
  std::optional<double> k_rep_perm;
  std::optional<double> k_rep_imp;
  std::optional<double> d_obs_star;
  std::optional<double> beta;
  std::optional<double> step;
  std::optional<int> steps;
  friend bool operator==(const ProfileSpec&, const ProfileSpec&) = default;
};

struct ExperimentBlock {
  int trials = 100;
  std::uint64_t base_seed = 0;
  std::vector<int> checkpoints;
  /// Profile the t-tests compare every other profile against.
  std::string reference;
  friend bool operator==(const ExperimentBlock&, const ExperimentBlock&) = default;
};

struct ScenarioFile {
  std::string name;
  EnvironmentKind kind = EnvironmentKind::kPoint2d;
  AxisAlignedRect bounds;
  std::vector<ObstacleRegion> obstacles;
  Config start;
  Config goal;
  std::optional<ArmSpec> arm;
  PotentialParams potential;
  PlannerSettings planner;
  std::vector<ProfileSpec> profiles;
  std::optional<ExperimentBlock> experiment;

  const ProfileSpec& profile(std::string_view name) const;
  friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;
};

/// Parses and fully validates (including building the environment once).
/// Throws ScenarioError with the offending line.
ScenarioFile parse_scenario(std::string_view text);

/// Reads a file and parses it; I/O failures throw std::system_error.
ScenarioFile load_scenario(const std::string& path);

/// Canonical text such that parse_scenario(emit_scenario(s)) == s.
std::string emit_scenario(const ScenarioFile& scenario);

std::shared_ptr<const CSpaceEnvironment> build_environment(const ScenarioFile& scenario);

/// Planner parameters for one profile. Checkpoints come from the experiment
/// block, or default to {max_iterations}.
PlannerParams build_planner_params(const ScenarioFile& scenario, std::string_view profile,
                                   const CSpaceEnvironment& env, std::uint64_t seed = 0);

/// Every profile in declaration order. Throws ScenarioError without an
/// experiment block.
ExperimentSpec build_experiment(const ScenarioFile& scenario,
                                std::shared_ptr<const CSpaceEnvironment> env);

}  // namespace apfrrt
