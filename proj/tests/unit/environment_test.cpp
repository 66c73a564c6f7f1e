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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "apfrrt/environment.hpp"
#include "fixtures.hpp"

namespace apfrrt {
namespace {

using std::numbers::pi;
using testing::impermeable_disc;
using testing::impermeable_rect;
using testing::open_env;
using testing::permeable_disc;
using testing::square_world;
using testing::unit_arm;

TEST(PointEnvironment, ClassifiesFreePoint) {
  const auto env = open_env({10, 50}, {90, 50});
  EXPECT_TRUE(env->classify({30, 30}).is_free());
}

TEST(PointEnvironment, GoalDistanceAtGoalIsZero) {
  const auto env = open_env({10, 50}, {90, 50});
  EXPECT_EQ(env->goal_distance(env->goal()), 0.0);
}

TEST(PointEnvironment, SamplesNeverImpermeable) {
  const auto env = point2d_env(square_world(100, {impermeable_rect({20, 0}, {50, 100})}), {10, 50}, {90, 50});
  Rng rng(42);
  int hits = 0;
  for (int i = 0; i < 10000; ++i) hits += env->classify(env->sample_free(rng)).is_impermeable();
  EXPECT_EQ(hits, 0);
}

TEST(PointEnvironment, RejectsImpermeableEndpoints) {
  const World w = square_world(100, {impermeable_rect({40, 40}, {60, 60})});
  EXPECT_THROW(point2d_env(w, {50, 50}, {90, 50}), std::invalid_argument);
  EXPECT_THROW(point2d_env(w, {10, 50}, {50, 50}), std::invalid_argument);
  EXPECT_THROW(point2d_env(w, {-1, 50}, {90, 50}), std::invalid_argument);
}

TEST(PointEnvironment, MetricAxiomsOnRandomTriples) {
  const auto env = open_env({10, 50}, {90, 50});
  Rng rng(9);
  for (int i = 0; i < 2000; ++i) {
    const auto a = env->sample_free(rng);
    const auto b = env->sample_free(rng);
    const auto c = env->sample_free(rng);
    EXPECT_EQ(env->distance(a, b), env->distance(b, a));
    EXPECT_EQ(env->distance(a, a), 0.0);
    EXPECT_GT(env->distance(a, b), 0.0);
    EXPECT_LE(env->distance(a, c), env->distance(a, b) + env->distance(b, c) + 1e-12);
    EXPECT_DOUBLE_EQ(env->distance(a, b), std::hypot(a[0] - b[0], a[1] - b[1]));
  }
}

TEST(PointEnvironment, ClearanceConsistentWithClassify) {
  const auto env = point2d_env(square_world(20, {permeable_disc({5, 5}, 2, 10), impermeable_disc({15, 15}, 2)}),
                               {1, 19}, {19, 1});
  Rng rng(4);
  for (int i = 0; i < 3000; ++i) {
    const auto q = env->sample_free(rng);
    const auto d = env->clearance_per_class(q);
    const auto occ = env->classify(q);
    ASSERT_TRUE(d.permeable && d.impermeable);
    EXPECT_GT(*d.impermeable, 0.0);
    if (occ.is_permeable()) {
      EXPECT_EQ(*d.permeable, 0.0);
    } else {
      EXPECT_GT(*d.permeable, 0.0);
    }
  }
}

TEST(ForwardKinematics, StraightArm) {
  const auto pts = forward_kinematics(unit_arm(), {0, 0});
  EXPECT_NEAR(pts.back().x, 2.0, 1e-12);
  EXPECT_NEAR(pts.back().y, 0.0, 1e-12);
  EXPECT_EQ(pts.size(), 1u + 2u * 8u);
}

TEST(ForwardKinematics, RaisedArm) {
  const auto pts = forward_kinematics(unit_arm(), {pi / 2, 0});
  EXPECT_NEAR(pts.back().x, 0.0, 1e-12);
  EXPECT_NEAR(pts.back().y, 2.0, 1e-12);
}

TEST(ForwardKinematics, ElbowBent) {
  const auto pts = forward_kinematics(unit_arm(), {pi / 2, -pi / 2});
  EXPECT_NEAR(pts.back().x, 1.0, 1e-12);
  EXPECT_NEAR(pts.back().y, 1.0, 1e-12);
  EXPECT_NEAR(pts[8].x, 0.0, 1e-12);
  EXPECT_NEAR(pts[8].y, 1.0, 1e-12);
}

TEST(ForwardKinematics, RejectsJointLimitViolation) {
  EXPECT_THROW(forward_kinematics(unit_arm(), {3.1, 0}), std::out_of_range);
}

TEST(PlanarArm, ValidatesShape) {
  PlanarArm one_link{{1.0}, {0, 0}, {{-1, 1}}, 8};
  EXPECT_THROW(one_link.validate(), std::invalid_argument);
  PlanarArm bad_limit{{1, 1}, {0, 0}, {{-4, 1}, {-1, 1}}, 8};
  EXPECT_THROW(bad_limit.validate(), std::invalid_argument);
  PlanarArm bad_length{{1, -1}, {0, 0}, {{-1, 1}, {-1, 1}}, 8};
  EXPECT_THROW(bad_length.validate(), std::invalid_argument);
}

class ArmEnvironmentTest : public ::testing::Test {
 protected:
  std::shared_ptr<const ArmEnvironment> make(std::vector<ObstacleRegion> obstacles) {
    return arm_env(unit_arm(), World(AxisAlignedRect{{-3, -3}, {3, 3}}, std::move(obstacles)), {0, 0},
                   {0, 2}, {pi / 2, 0});
  }
};

TEST_F(ArmEnvironmentTest, ClearArmIsFree) {
  EXPECT_TRUE(make({})->classify({0.3, 0.2}).is_free());
}

TEST_F(ArmEnvironmentTest, LinkPointInFoliageIsPermeable) {
  const auto env = make({permeable_disc({1.0, 0.0}, 0.1, 100)});
  EXPECT_EQ(env->classify({0, 0}), Occupancy::permeable(100));
}

TEST_F(ArmEnvironmentTest, FoliageAndStemIsImpermeable) {
  const auto env = make({permeable_disc({0.5, 0.0}, 0.1, 100), impermeable_disc({1.4127, -0.2823}, 0.05)});
  EXPECT_TRUE(env->classify({0, -0.6}).is_impermeable());
}

TEST_F(ArmEnvironmentTest, FullTurnIsZeroDistance) {
  const auto env = make({});
  const Config q{0.4, -0.7};
  EXPECT_NEAR(env->distance(q, Config{0.4 + 2 * pi, -0.7 - 2 * pi}), 0.0, 1e-12);
  EXPECT_NEAR(env->distance(Config{3.0, 0}, Config{-3.0, 0}), 2 * pi - 6.0, 1e-12);
}

TEST_F(ArmEnvironmentTest, ClearanceUsesClosestLinkPoint) {
  const auto env = make({permeable_disc({0, 1.5}, 0.2, 5)});
  const auto d = env->clearance_per_class({0, 0});
  ASSERT_TRUE(d.permeable);
  EXPECT_NEAR(*d.permeable, std::hypot(1.5, 0.0) - 0.2, 1e-12);
  EXPECT_FALSE(d.impermeable);
  EXPECT_EQ(*env->clearance_per_class({pi / 2, 0}).permeable, 0.0);
}

TEST_F(ArmEnvironmentTest, RejectsGoalPoseMismatch) {
  EXPECT_THROW(arm_env(unit_arm(), World(AxisAlignedRect{{-3, -3}, {3, 3}}, {}), {0, 0}, {1, 1}, {pi / 2, 0}),
               std::invalid_argument);
}

TEST(Steer, StepsAlongDirection) {
  const auto env = open_env({0, 0}, {90, 50});
  const Config q = steer(*env, {0, 0}, Tangent{1, 0}, 3.0);
  EXPECT_EQ(q, (Config{3, 0}));
}

TEST(Steer, ArmStepHasRequestedNorm) {
  const auto env = arm_env(unit_arm(), World(AxisAlignedRect{{-3, -3}, {3, 3}}, {}), {0, 0}, {0, 2}, {pi / 2, 0});
  Tangent dir{0.6, 0.8};
  const Config q = steer(*env, {0.1, 0.2}, dir, 0.1);
  EXPECT_NEAR(env->distance(q, Config{0.1, 0.2}), 0.1, 1e-12);
}

TEST(Steer, ClampsAtBounds) {
  const auto env = open_env({0, 0}, {90, 50});
  const Config q = steer(*env, {99, 50}, Tangent{1, 0}, 3.0);
  EXPECT_EQ(q, (Config{100, 50}));
}

TEST(Steer, RejectsNonUnitDirectionAndBadStep) {
  const auto env = open_env({0, 0}, {90, 50});
  EXPECT_THROW(steer(*env, {1, 1}, Tangent{0, 0}, 3.0), std::invalid_argument);
  EXPECT_THROW(steer(*env, {1, 1}, Tangent{2, 0}, 3.0), std::invalid_argument);
  EXPECT_THROW(steer(*env, {1, 1}, Tangent{1, 0}, 0.0), std::invalid_argument);
}

TEST(WrapAngle, MapsIntoHalfOpenInterval) {
  EXPECT_DOUBLE_EQ(wrap_angle(pi), pi);
  EXPECT_DOUBLE_EQ(wrap_angle(-pi), pi);
  EXPECT_NEAR(wrap_angle(3 * pi / 2), -pi / 2, 1e-12);
  EXPECT_NEAR(wrap_angle(0.25 + 4 * pi), 0.25, 1e-12);
}

}  // namespace
}  // namespace apfrrt
