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

#include "apfrrt/tree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include <fmt/format.h>

namespace apfrrt {
namespace {

constexpr double kCostTolerance = 1e-9;

}  // namespace

double cost_through(const CSpaceEnvironment& env, const Config& config, const TreeNode& parent) {
  return env.distance(config, parent.config) + parent.c_path + parent.c_perm;
}

NodeId SearchTree::add_root(Config config, double c_perm) {
  if (!nodes_.empty()) throw std::logic_error("tree already has a root");
  nodes_.push_back(TreeNode{0, std::move(config), std::nullopt, 0.0, c_perm});
  children_.emplace_back();
  return 0;
}

NodeId SearchTree::add_node(const CSpaceEnvironment& env, Config config, NodeId parent,
                            double c_perm) {
  const auto id = static_cast<NodeId>(nodes_.size());
  const double c_path = cost_through(env, config, nodes_.at(parent));
  nodes_.push_back(TreeNode{id, std::move(config), parent, c_path, c_perm});
  children_.emplace_back();
  children_[parent].push_back(id);
  return id;
}

void SearchTree::reparent(const CSpaceEnvironment& env, NodeId node, NodeId new_parent) {
  TreeNode& n = nodes_.at(node);
  if (n.parent) {
    auto& siblings = children_[*n.parent];
    siblings.erase(std::find(siblings.begin(), siblings.end(), node));
  }
  n.parent = new_parent;
  children_.at(new_parent).push_back(node);

  // Recompute costs top-down so every edge satisfies cost_through exactly.
  std::vector<NodeId> stack{node};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    TreeNode& cur = nodes_[id];
    cur.c_path = cost_through(env, cur.config, nodes_[*cur.parent]);
    for (NodeId child : children_[id]) stack.push_back(child);
  }
}

bool SearchTree::is_ancestor(NodeId ancestor, NodeId node) const {
  std::optional<NodeId> cur = node;
  for (std::size_t steps = 0; cur && steps <= nodes_.size(); ++steps) {
    if (*cur == ancestor) return true;
    cur = nodes_[*cur].parent;
  }
  return false;
}

NodeId SearchTree::nearest(const CSpaceEnvironment& env, const Config& q) const {
  if (nodes_.empty()) throw std::logic_error("nearest on an empty tree");
  NodeId best = 0;
  double best_d = env.distance(nodes_[0].config, q);
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    const double d = env.distance(nodes_[i].config, q);
    if (d < best_d) {
      best_d = d;
      best = static_cast<NodeId>(i);
    }
  }
  return best;
}

std::vector<NodeId> SearchTree::within_radius(const CSpaceEnvironment& env, const Config& q,
                                              double r) const {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (env.distance(nodes_[i].config, q) <= r) out.push_back(static_cast<NodeId>(i));
  }
  return out;
}

std::vector<NodeId> SearchTree::trace_to_root(NodeId id) const {
  std::vector<NodeId> out;
  std::optional<NodeId> cur = id;
  while (cur) {
    out.push_back(*cur);
    if (out.size() > nodes_.size()) throw std::logic_error("cycle while tracing to root");
    cur = nodes_.at(*cur).parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<TreeViolation> validate_tree(const CSpaceEnvironment& env, const SearchTree& tree) {
  using Kind = TreeViolation::Kind;
  std::vector<TreeViolation> out;
  const auto nodes = tree.nodes();
  const std::size_t n = nodes.size();

  std::size_t roots = 0;
  for (const auto& node : nodes) {
    if (!node.parent) {
      ++roots;
      if (std::abs(node.c_path) > kCostTolerance) {
        out.push_back({Kind::kCostMismatch, node.id,
                       fmt::format("root {} has c_path {}", node.id, node.c_path)});
      }
    } else if (*node.parent >= n) {
      out.push_back({Kind::kDanglingParent, node.id,
                     fmt::format("node {} points at missing parent {}", node.id, *node.parent)});
    }
  }
  if (roots != 1) {
    out.push_back({Kind::kRootCount, std::nullopt, fmt::format("expected 1 root, found {}", roots)});
  }

  // 0 = unknown, 1 = on the current walk, 2 = reaches a root.
  std::vector<int> state(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> walk;
    std::size_t cur = start;
    bool cyclic = false;
    while (true) {
      if (state[cur] == 2) break;
      if (state[cur] == 1) {
        cyclic = true;
        break;
      }
      state[cur] = 1;
      walk.push_back(cur);
      const auto& parent = nodes[cur].parent;
      if (!parent || *parent >= n) break;
      cur = *parent;
    }
    if (cyclic) {
      out.push_back({Kind::kCycle, static_cast<NodeId>(cur),
                     fmt::format("parent chain from node {} revisits node {}", start, cur)});
    }
    for (std::size_t w : walk) state[w] = 2;
  }

  for (const auto& node : nodes) {
    if (node.parent && *node.parent < n) {
      const double expected = cost_through(env, node.config, nodes[*node.parent]);
      if (!(std::abs(node.c_path - expected) <= kCostTolerance)) {
        out.push_back({Kind::kCostMismatch, node.id,
                       fmt::format("node {} has c_path {} but its parent edge gives {}", node.id,
                                   node.c_path, expected)});
      }
    }
    if (env.classify(node.config).is_impermeable()) {
      out.push_back({Kind::kImpermeableNode, node.id,
                     fmt::format("node {} lies inside an impermeable obstacle", node.id)});
    }
  }
  return out;
}

}  // namespace apfrrt
