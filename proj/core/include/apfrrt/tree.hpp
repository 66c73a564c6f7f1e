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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apfrrt/config.hpp"
#include "apfrrt/environment.hpp"

namespace apfrrt {

using NodeId = std::uint32_t;

/// c_path is the cost of the tree path from the root; c_perm is the
/// collision cost of this node's own configuration.
struct TreeNode {
  NodeId id = 0;
  Config config;
  std::optional<NodeId> parent;
  double c_path = 0.0;
  double c_perm = 0.0;
};

/// Cost of reaching `config` through `parent`:
/// d(config, parent) + parent.c_path + parent.c_perm.
double cost_through(const CSpaceEnvironment& env, const Config& config, const TreeNode& parent);

/// RRT* search tree. Node ids are dense insertion indices.
class SearchTree {
 public:
  NodeId add_root(Config config, double c_perm);

  /// Appends a node under `parent` with c_path computed by cost_through.
  NodeId add_node(const CSpaceEnvironment& env, Config config, NodeId parent, double c_perm);

  /// Moves `node` under `new_parent` and recomputes c_path for it and its
  /// whole subtree. The caller guarantees new_parent is not in that subtree.
  void reparent(const CSpaceEnvironment& env, NodeId node, NodeId new_parent);

  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  const TreeNode& node(NodeId id) const { return nodes_.at(id); }
  std::span<const TreeNode> nodes() const { return nodes_; }
  std::span<const NodeId> children(NodeId id) const { return children_.at(id); }

  /// True when `ancestor` lies on the root path of `node` (a node is its own
  /// ancestor).
  bool is_ancestor(NodeId ancestor, NodeId node) const;

  /// Node closest to q; ties go to the lowest id. Throws std::logic_error on
  /// an empty tree.
  NodeId nearest(const CSpaceEnvironment& env, const Config& q) const;

  /// Ids (ascending) of nodes within distance r of q.
  std::vector<NodeId> within_radius(const CSpaceEnvironment& env, const Config& q,
                                    double r) const;

  /// Root-to-node id sequence.
  std::vector<NodeId> trace_to_root(NodeId id) const;

  /// Raw field access without bookkeeping; meant for tests that corrupt a
  /// tree on purpose.
  TreeNode& unchecked_node(NodeId id) { return nodes_.at(id); }

 private:
  std::vector<TreeNode> nodes_;
  std::vector<std::vector<NodeId>> children_;
};

struct TreeViolation {
  enum class Kind { kRootCount, kDanglingParent, kCycle, kCostMismatch, kImpermeableNode };
  Kind kind;
  std::optional<NodeId> node;
  std::string message;
};

/// Structural and cost checks: exactly one root with c_path 0, parents exist,
/// no cycles, every non-root node satisfies c_path == cost_through(parent)
/// within 1e-9, and no node classifies Impermeable. Empty result = valid.
std::vector<TreeViolation> validate_tree(const CSpaceEnvironment& env, const SearchTree& tree);

}  // namespace apfrrt
