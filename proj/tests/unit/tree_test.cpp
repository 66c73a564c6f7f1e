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

#include <algorithm>

#include <gtest/gtest.h>

#include "apfrrt/tree.hpp"
#include "fixtures.hpp"

namespace apfrrt {
namespace {

using testing::open_env;

bool has_kind(const std::vector<TreeViolation>& v, TreeViolation::Kind k) {
  return std::any_of(v.begin(), v.end(), [&](const TreeViolation& x) { return x.kind == k; });
}

class TreeTest : public ::testing::Test {
 protected:
  std::shared_ptr<const PointEnvironment> env_ = open_env({0, 0}, {90, 90});
};

TEST_F(TreeTest, NearestOnSingleNodeTree) {
  SearchTree t;
  t.add_root({0, 0}, 0);
  EXPECT_EQ(t.nearest(*env_, {40, 40}), 0u);
}

TEST_F(TreeTest, NearestPicksClosest) {
  SearchTree t;
  t.add_root({5, 0}, 0);
  t.add_node(*env_, {0, 2}, 0, 0);
  t.add_node(*env_, {0, 7}, 0, 0);
  EXPECT_EQ(t.nearest(*env_, {0, 0}), 1u);
}

TEST_F(TreeTest, NearestTieGoesToEarlierNode) {
  SearchTree t;
  t.add_root({0, 0}, 0);
  t.add_node(*env_, {4, 0}, 0, 0);
  t.add_node(*env_, {0, 4}, 0, 0);
  EXPECT_EQ(t.nearest(*env_, {2, 2}), 0u);
  EXPECT_EQ(t.nearest(*env_, {2, -1}), 0u);
  EXPECT_EQ(t.nearest(*env_, {4, 4}), 1u);
}

TEST_F(TreeTest, NearestOnEmptyTreeThrows) {
  SearchTree t;
  EXPECT_THROW(t.nearest(*env_, {1, 1}), std::logic_error);
}

TEST_F(TreeTest, WithinRadiusIsAscendingAndInclusive) {
  SearchTree t;
  t.add_root({10, 10}, 0);
  t.add_node(*env_, {13, 10}, 0, 0);
  t.add_node(*env_, {20, 20}, 1, 0);
  t.add_node(*env_, {10, 7}, 0, 0);
  EXPECT_EQ(t.within_radius(*env_, {10, 10}, 3.0), (std::vector<NodeId>{0, 1, 3}));
}

TEST_F(TreeTest, AddNodeUsesCostThroughParent) {
  SearchTree t;
  t.add_root({0, 0}, 0);
  const NodeId a = t.add_node(*env_, {0, 10}, 0, 100);
  const NodeId b = t.add_node(*env_, {10, 10}, a, 0);
  EXPECT_EQ(t.node(a).c_path, 10.0);
  EXPECT_EQ(t.node(b).c_path, 120.0);
  EXPECT_EQ(t.trace_to_root(b), (std::vector<NodeId>{0, a, b}));
}

TEST_F(TreeTest, ReparentPropagatesToSubtree) {
  SearchTree t;
  t.add_root({0, 0}, 0);
  const NodeId p = t.add_node(*env_, {0, 10}, 0, 100);
  const NodeId n = t.add_node(*env_, {10, 10}, p, 0);
  const NodeId c = t.add_node(*env_, {13, 10}, n, 0);
  const NodeId q = t.add_node(*env_, {10, 0}, 0, 0);
  t.reparent(*env_, n, q);
  EXPECT_EQ(t.node(n).c_path, 20.0);
  EXPECT_EQ(t.node(c).c_path, 23.0);
  EXPECT_TRUE(t.children(p).empty());
  EXPECT_TRUE(validate_tree(*env_, t).empty());
}

TEST_F(TreeTest, IsAncestor) {
  SearchTree t;
  t.add_root({0, 0}, 0);
  const NodeId a = t.add_node(*env_, {1, 0}, 0, 0);
  const NodeId b = t.add_node(*env_, {2, 0}, a, 0);
  const NodeId c = t.add_node(*env_, {0, 1}, 0, 0);
  EXPECT_TRUE(t.is_ancestor(0, b));
  EXPECT_TRUE(t.is_ancestor(a, b));
  EXPECT_TRUE(t.is_ancestor(b, b));
  EXPECT_FALSE(t.is_ancestor(c, b));
  EXPECT_FALSE(t.is_ancestor(b, a));
}

TEST_F(TreeTest, ValidTreeHasNoViolations) {
  SearchTree t;
  t.add_root({0, 0}, 0);
  t.add_node(*env_, {1, 0}, 0, 5);
  t.add_node(*env_, {2, 0}, 1, 0);
  EXPECT_TRUE(validate_tree(*env_, t).empty());
}

TEST_F(TreeTest, CorruptedCostReportsOneViolation) {
  SearchTree t;
  t.add_root({0, 0}, 0);
  t.add_node(*env_, {1, 0}, 0, 5);
  const NodeId leaf = t.add_node(*env_, {2, 0}, 1, 0);
  t.unchecked_node(leaf).c_path += 1.0;
  const auto v = validate_tree(*env_, t);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, TreeViolation::Kind::kCostMismatch);
  EXPECT_EQ(v[0].node, leaf);
}

TEST_F(TreeTest, ToleratesRoundoffInCost) {
  SearchTree t;
  t.add_root({0, 0}, 0);
  const NodeId a = t.add_node(*env_, {1, 0}, 0, 0);
  t.unchecked_node(a).c_path += 1e-12;
  EXPECT_TRUE(validate_tree(*env_, t).empty());
}

TEST_F(TreeTest, CycleIsReported) {
  SearchTree t;
  t.add_root({0, 0}, 0);
  const NodeId a = t.add_node(*env_, {1, 0}, 0, 0);
  const NodeId b = t.add_node(*env_, {2, 0}, a, 0);
  t.unchecked_node(a).parent = b;
  EXPECT_TRUE(has_kind(validate_tree(*env_, t), TreeViolation::Kind::kCycle));
}

TEST_F(TreeTest, DanglingParentIsReported) {
  SearchTree t;
  t.add_root({0, 0}, 0);
  const NodeId a = t.add_node(*env_, {1, 0}, 0, 0);
  t.unchecked_node(a).parent = 42;
  EXPECT_TRUE(has_kind(validate_tree(*env_, t), TreeViolation::Kind::kDanglingParent));
}

TEST_F(TreeTest, SecondRootIsReported) {
  SearchTree t;
  t.add_root({0, 0}, 0);
  const NodeId a = t.add_node(*env_, {1, 0}, 0, 0);
  t.unchecked_node(a).parent.reset();
  EXPECT_TRUE(has_kind(validate_tree(*env_, t), TreeViolation::Kind::kRootCount));
}

TEST(TreeValidation, ImpermeableNodeIsReported) {
  const auto env = point2d_env(testing::square_world(10, {testing::impermeable_rect({4, 4}, {6, 6})}),
                               {0, 0}, {9, 9});
  SearchTree t;
  t.add_root({0, 0}, 0);
  t.add_node(*env, {5, 5}, 0, 0);
  EXPECT_TRUE(has_kind(validate_tree(*env, t), TreeViolation::Kind::kImpermeableNode));
}

}  // namespace
}  // namespace apfrrt
