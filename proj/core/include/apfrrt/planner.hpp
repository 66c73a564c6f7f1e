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
#include <variant>
#include <vector>

#include "apfrrt/config.hpp"
#include "apfrrt/environment.hpp"
#include "apfrrt/potential.hpp"
#include "apfrrt/tree.hpp"

namespace apfrrt {

/// Plain cost-based RRT*: extend straight toward the sample.
struct NoBias {
  friend bool operator==(const NoBias&, const NoBias&) = default;
};

/// Potential field applied at the nearest node with the adaptive blend.
struct NearestNodeBias {
  PotentialParams potential;
  friend bool operator==(const NearestNodeBias&, const NearestNodeBias&) = default;
};

/// P-RRT* style: the random sample is pushed down the potential before the
/// nearest-node lookup.
struct SampleBias {
  PotentialParams potential;
  double step = 0.5;
  int iters = 10;
  friend bool operator==(const SampleBias&, const SampleBias&) = default;
};

using ExtensionStrategy = std::variant<NoBias, NearestNodeBias, SampleBias>;

struct PlannerParams {
  int max_iterations = 5000;
  double delta = 3.0;
  double neighbor_radius = 3.0;
  double goal_radius = 3.0;
  double edge_check_resolution = 0.3;
  ExtensionStrategy strategy = NoBias{};
  std::uint64_t rng_seed = 0;
  /// Sorted iteration counts at which the best solution cost is recorded.
  std::vector<int> checkpoints;

  /// neighbor_radius = goal_radius = delta, edge_check_resolution = delta/10.
  static PlannerParams with_step(double delta);

  /// Throws std::invalid_argument when any constraint fails (for example
  /// neighbor_radius > delta, or a checkpoint beyond max_iterations).
  void validate() const;
};

struct CheckpointCost {
  int iteration = 0;
  std::optional<double> cost;
  friend bool operator==(const CheckpointCost&, const CheckpointCost&) = default;
};

struct PlanResult {
  /// q_start ... q_goal, absent when no node reached the goal region.
  std::optional<std::vector<Config>> path;
  double path_length = 0.0;
  /// Path nodes (goal included) with a positive collision cost.
  int n_collision = 0;
  /// path_length + sum of c_perm over every path node.
  double total_cost = 0.0;
  std::vector<CheckpointCost> checkpoint_costs;
  std::size_t tree_size = 0;
  std::uint64_t rng_seed = 0;

  bool solved() const { return path.has_value(); }
  friend bool operator==(const PlanResult&, const PlanResult&) = default;
};

struct ParentChoice {
  NodeId parent = 0;
  double c_path = 0.0;
};

/// New configuration grown from q_near toward q_rand per the strategy;
/// absent when q_rand coincides with q_near.
std::optional<Config> extend(const CSpaceEnvironment& env, const PlannerParams& params,
                             const Config& q_near, const Config& q_rand);

/// Neighbor minimizing cost_through (ties to the lowest id) among those whose
/// edge to q_new is free of impermeable obstacles; absent when all are
/// blocked. `neighbors` must be sorted ascending.
std::optional<ParentChoice> choose_parent(const CSpaceEnvironment& env, const SearchTree& tree,
                                          const Config& q_new, std::span<const NodeId> neighbors,
                                          double edge_resolution);

/// Reparents neighbors (ascending id order) under `new_node` when that gives
/// a strictly lower c_path over an impermeable-free edge. Ancestors of
/// new_node are skipped. Returns the number of reparented nodes.
int rewire(const CSpaceEnvironment& env, SearchTree& tree, NodeId new_node,
           std::span<const NodeId> neighbors, double edge_resolution);

/// Cheapest way to finish at the goal from the current tree.
struct GoalConnection {
  NodeId parent = 0;
  /// cost_through(goal, parent) + c_perm(goal).
  double total_cost = 0.0;
};

std::optional<GoalConnection> best_goal_connection(const CSpaceEnvironment& env,
                                                   const SearchTree& tree, double goal_radius,
                                                   double edge_resolution);

/// Cost-based RRT* with an optional potential-field bias. One instance runs
/// one plan on one thread; the environment may be shared.
class Planner {
 public:
  Planner(std::shared_ptr<const CSpaceEnvironment> env, PlannerParams params);

  PlanResult plan();

  const SearchTree& tree() const { return tree_; }
  const PlannerParams& params() const { return params_; }
  const CSpaceEnvironment& environment() const { return *env_; }

 private:
  void iterate(Rng& rng);
  PlanResult extract(const std::vector<CheckpointCost>& checkpoints) const;

  std::shared_ptr<const CSpaceEnvironment> env_;
  PlannerParams params_;
  SearchTree tree_;
};

PlanResult plan(std::shared_ptr<const CSpaceEnvironment> env, const PlannerParams& params);

}  // namespace apfrrt
