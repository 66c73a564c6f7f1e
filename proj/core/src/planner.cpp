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

#include "apfrrt/planner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace apfrrt {
namespace {

const PotentialParams* potential_of(const ExtensionStrategy& s) {
  if (const auto* n = std::get_if<NearestNodeBias>(&s)) return &n->potential;
  if (const auto* b = std::get_if<SampleBias>(&s)) return &b->potential;
  return nullptr;
}

}  // namespace

PlannerParams PlannerParams::with_step(double delta) {
  PlannerParams p;
  p.delta = delta;
  p.neighbor_radius = delta;
  p.goal_radius = delta;
  p.edge_check_resolution = delta / 10.0;
  return p;
}

void PlannerParams::validate() const {
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw std::invalid_argument("delta must be > 0");
  if (!(neighbor_radius > 0.0)) throw std::invalid_argument("neighbor_radius must be > 0");
  if (neighbor_radius > delta) throw std::invalid_argument("neighbor_radius must be <= delta");
  if (!(goal_radius > 0.0)) throw std::invalid_argument("goal_radius must be > 0");
  if (!(edge_check_resolution > 0.0)) {
    throw std::invalid_argument("edge_check_resolution must be > 0");
  }
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) ||
      std::adjacent_find(checkpoints.begin(), checkpoints.end()) != checkpoints.end()) {
    throw std::invalid_argument("checkpoints must be strictly increasing");
  }
  for (int c : checkpoints) {
    if (c < 1 || c > max_iterations) {
      throw std::invalid_argument("checkpoints must lie in [1, max_iterations]");
    }
  }
  if (const auto* p = potential_of(strategy)) p->validate();
  if (const auto* b = std::get_if<SampleBias>(&strategy)) {
    if (!(b->step > 0.0)) throw std::invalid_argument("sample bias step must be > 0");
    if (b->iters < 0) throw std::invalid_argument("sample bias iterations must be >= 0");
  }
}

std::optional<Config> extend(const CSpaceEnvironment& env, const PlannerParams& params,
                             const Config& q_near, const Config& q_rand) {
  if (env.distance(q_near, q_rand) == 0.0) return std::nullopt;
  Tangent direction;
  if (const auto* bias = std::get_if<NearestNodeBias>(&params.strategy)) {
    direction = biased_extend_direction(env, bias->potential, q_near, q_rand);
  } else {
    // SampleBias shifted q_rand before the nearest-node lookup.
    direction = env.difference(q_rand, q_near);
    direction *= 1.0 / norm(direction);
  }
  return steer(env, q_near, direction, params.delta);
}

std::optional<ParentChoice> choose_parent(const CSpaceEnvironment& env, const SearchTree& tree,
                                          const Config& q_new, std::span<const NodeId> neighbors,
                                          double edge_resolution) {
  std::optional<ParentChoice> best;
  for (NodeId id : neighbors) {
    const TreeNode& cand = tree.node(id);
    const double c = cost_through(env, q_new, cand);
    if (best && !(c < best->c_path)) continue;
    if (env.edge_hits_impermeable(cand.config, q_new, edge_resolution)) continue;
    best = ParentChoice{id, c};
  }
  return best;
}

int rewire(const CSpaceEnvironment& env, SearchTree& tree, NodeId new_node,
           std::span<const NodeId> neighbors, double edge_resolution) {
  int rewired = 0;
  for (NodeId id : neighbors) {
    if (tree.is_ancestor(id, new_node)) continue;
    const TreeNode& source = tree.node(new_node);
    const TreeNode& n = tree.node(id);
    const double candidate = cost_through(env, n.config, source);
    if (!(candidate < n.c_path)) continue;
    if (env.edge_hits_impermeable(source.config, n.config, edge_resolution)) continue;
    tree.reparent(env, id, new_node);
    ++rewired;
  }
  return rewired;
}

std::optional<GoalConnection> best_goal_connection(const CSpaceEnvironment& env,
                                                   const SearchTree& tree, double goal_radius,
                                                   double edge_resolution) {
  const Config& goal = env.goal();
  const double goal_cost = env.classify(goal).cost();
  std::optional<GoalConnection> best;
  for (const TreeNode& n : tree.nodes()) {
    if (env.distance(n.config, goal) > goal_radius) continue;
    const double c = cost_through(env, goal, n) + goal_cost;
    if (best && !(c < best->total_cost)) continue;
    if (env.edge_hits_impermeable(n.config, goal, edge_resolution)) continue;
    best = GoalConnection{n.id, c};
  }
  return best;
}

Planner::Planner(std::shared_ptr<const CSpaceEnvironment> env, PlannerParams params)
    : env_(std::move(env)), params_(std::move(params)) {
  if (!env_) throw std::invalid_argument("planner needs an environment");
  params_.validate();
}

PlanResult Planner::plan() {
  tree_ = SearchTree{};
  tree_.add_root(env_->start(), env_->classify(env_->start()).cost());

  Rng rng(params_.rng_seed);
  std::vector<CheckpointCost> checkpoints;
  checkpoints.reserve(params_.checkpoints.size());
  auto next_checkpoint = params_.checkpoints.begin();

  for (int it = 1; it <= params_.max_iterations; ++it) {
    iterate(rng);
    if (next_checkpoint != params_.checkpoints.end() && *next_checkpoint == it) {
      const auto conn = best_goal_connection(*env_, tree_, params_.goal_radius,
                                             params_.edge_check_resolution);
      checkpoints.push_back({it, conn ? std::optional(conn->total_cost) : std::nullopt});
      ++next_checkpoint;
    }
  }
  return extract(checkpoints);
}

void Planner::iterate(Rng& rng) {
  const CSpaceEnvironment& env = *env_;

  Config q_rand = env.sample_free(rng);
  if (const auto* bias = std::get_if<SampleBias>(&params_.strategy)) {
    q_rand = bias_random_sample(env, bias->potential, q_rand, bias->step, bias->iters);
  }

  const NodeId near = tree_.nearest(env, q_rand);
  const auto q_new = extend(env, params_, tree_.node(near).config, q_rand);
  if (!q_new) return;

  const Occupancy occ = env.classify(*q_new);
  if (occ.is_impermeable()) return;

  std::vector<NodeId> neighbors = tree_.within_radius(env, *q_new, params_.neighbor_radius);
  if (!std::binary_search(neighbors.begin(), neighbors.end(), near)) {
    neighbors.insert(std::lower_bound(neighbors.begin(), neighbors.end(), near), near);
  }

  const auto choice =
      choose_parent(env, tree_, *q_new, neighbors, params_.edge_check_resolution);
  if (!choice) return;

  const NodeId id = tree_.add_node(env, *q_new, choice->parent, occ.cost());
  rewire(env, tree_, id, neighbors, params_.edge_check_resolution);
}

PlanResult Planner::extract(const std::vector<CheckpointCost>& checkpoints) const {
  PlanResult r;
  r.checkpoint_costs = checkpoints;
  r.tree_size = tree_.size();
  r.rng_seed = params_.rng_seed;

  const auto conn = best_goal_connection(*env_, tree_, params_.goal_radius,
                                         params_.edge_check_resolution);
  if (!conn) return r;

  std::vector<Config> path;
  double collision = 0.0;
  for (NodeId id : tree_.trace_to_root(conn->parent)) {
    const TreeNode& n = tree_.node(id);
    path.push_back(n.config);
    collision += n.c_perm;
    if (n.c_perm > 0.0) ++r.n_collision;
  }
  const double goal_cost = env_->classify(env_->goal()).cost();
  path.push_back(env_->goal());
  collision += goal_cost;
  if (goal_cost > 0.0) ++r.n_collision;

  for (std::size_t i = 1; i < path.size(); ++i) {
    r.path_length += env_->distance(path[i - 1], path[i]);
  }
  r.total_cost = r.path_length + collision;
  r.path = std::move(path);
  return r;
}

PlanResult plan(std::shared_ptr<const CSpaceEnvironment> env, const PlannerParams& params) {
  Planner planner(std::move(env), params);
  return planner.plan();
}

}  // namespace apfrrt
