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

#include "apfrrt/geometry.hpp"
#include "apfrrt/random.hpp"
#include "fixtures.hpp"

namespace apfrrt {
namespace {

using testing::impermeable_disc;
using testing::impermeable_rect;
using testing::permeable_disc;
using testing::permeable_rect;
using testing::square_world;

TEST(ClassifyPoint, InsidePermeableWallReportsItsCost) {
  const World w = square_world(100, {permeable_rect({45, 10}, {55, 90}, 100)});
  EXPECT_EQ(classify_point(w, {50, 50}), Occupancy::permeable(100));
}

TEST(ClassifyPoint, OutsideEveryObstacleIsFree) {
  const World w = square_world(100, {permeable_rect({45, 10}, {55, 90}, 100)});
  EXPECT_TRUE(classify_point(w, {10, 50}).is_free());
  EXPECT_EQ(classify_point(w, {10, 50}).cost(), 0.0);
}

TEST(ClassifyPoint, ImpermeableDominatesPermeable) {
  const World w = square_world(10, {permeable_rect({0, 0}, {6, 6}, 100), impermeable_rect({4, 4}, {8, 8})});
  EXPECT_TRUE(classify_point(w, {5, 5}).is_impermeable());
}

TEST(ClassifyPoint, OverlappingPermeableTakesMaximumCost) {
  const World w = square_world(10, {permeable_rect({0, 0}, {6, 6}, 3), permeable_rect({4, 4}, {8, 8}, 7)});
  EXPECT_EQ(classify_point(w, {5, 5}), Occupancy::permeable(7));
  EXPECT_EQ(classify_point(w, {1, 1}), Occupancy::permeable(3));
}

TEST(ClassifyPoint, BoundaryCountsAsInside) {
  const World w = square_world(10, {impermeable_rect({2, 2}, {4, 4}), permeable_disc({7, 7}, 1, 5)});
  EXPECT_TRUE(classify_point(w, {2, 3}).is_impermeable());
  EXPECT_TRUE(classify_point(w, {8, 7}).is_permeable());
}

TEST(DistanceToShape, CircleCollinear) {
  EXPECT_DOUBLE_EQ(distance_to_shape(Circle{{0, 0}, 1}, {3, 0}), 2.0);
}

TEST(DistanceToShape, RectInteriorIsZero) {
  EXPECT_EQ(distance_to_shape(AxisAlignedRect{{0, 0}, {2, 2}}, {1, 1}), 0.0);
}

TEST(DistanceToShape, RectCornerMatchesDenseBoundarySampling) {
  const AxisAlignedRect r{{0, 0}, {2, 2}};
  const Point2 p{3, 3};
  double best = std::numeric_limits<double>::infinity();
  const int n = 20000;
  for (int i = 0; i <= n; ++i) {
    const double t = 2.0 * i / n;
    for (Point2 b : {Point2{t, 0}, Point2{t, 2}, Point2{0, t}, Point2{2, t}}) {
      best = std::min(best, norm(p - b));
    }
  }
  EXPECT_NEAR(best, std::numbers::sqrt2, 1e-9);
  EXPECT_NEAR(distance_to_shape(r, p), best, 1e-9);
}

TEST(DistanceToShape, LipschitzUnderRandomPairs) {
  Rng rng(7);
  const std::vector<Shape> shapes{Circle{{3, 4}, 1.5}, AxisAlignedRect{{-1, 2}, {4, 3}}};
  for (const auto& s : shapes) {
    for (int i = 0; i < 2000; ++i) {
      const Point2 p{rng.uniform(-10, 10), rng.uniform(-10, 10)};
      const Point2 q{rng.uniform(-10, 10), rng.uniform(-10, 10)};
      EXPECT_LE(std::abs(distance_to_shape(s, p) - distance_to_shape(s, q)), norm(p - q) + 1e-12);
    }
  }
}

TEST(DistanceGradient, MatchesCentralDifferences) {
  Rng rng(11);
  const std::vector<Shape> shapes{Circle{{0, 0}, 1}, AxisAlignedRect{{0, 0}, {2, 1}}};
  const double h = 1e-6;
  for (const auto& s : shapes) {
    for (int i = 0; i < 500; ++i) {
      const Point2 p{rng.uniform(-5, 5), rng.uniform(-5, 5)};
      if (distance_to_shape(s, p) < 0.01) continue;
      const Point2 g = distance_gradient(s, p);
      const double gx = (distance_to_shape(s, p + Point2{h, 0}) - distance_to_shape(s, p - Point2{h, 0})) / (2 * h);
      const double gy = (distance_to_shape(s, p + Point2{0, h}) - distance_to_shape(s, p - Point2{0, h})) / (2 * h);
      EXPECT_NEAR(g.x, gx, 1e-6);
      EXPECT_NEAR(g.y, gy, 1e-6);
    }
  }
}

TEST(MinDistancePerClass, SinglePermeableCircle) {
  const World w = square_world(10, {permeable_disc({5, 5}, 1, 10)});
  const auto d = min_distance_per_class(w, {8, 5});
  ASSERT_TRUE(d.permeable);
  EXPECT_DOUBLE_EQ(*d.permeable, 2.0);
  EXPECT_FALSE(d.impermeable);
}

TEST(MinDistancePerClass, EmptyWorldHasNoDistances) {
  const auto d = min_distance_per_class(square_world(10), {5, 5});
  EXPECT_FALSE(d.permeable);
  EXPECT_FALSE(d.impermeable);
}

TEST(MinDistancePerClass, TakesTheMinimumWithinAClass) {
  const World w = square_world(20, {permeable_disc({10, 4}, 1, 5), permeable_disc({10, 12}, 1, 5)});
  const auto d = min_distance_per_class(w, {10, 10});
  ASSERT_TRUE(d.permeable);
  EXPECT_DOUBLE_EQ(*d.permeable, 1.0);
  EXPECT_FALSE(d.impermeable);
}

TEST(SegmentHitsImpermeable, FreeSegment) {
  const World w = square_world(10, {impermeable_rect({4, 4}, {6, 6})});
  EXPECT_FALSE(segment_hits_impermeable(w, {1, 1}, {9, 1}, 0.1));
}

TEST(SegmentHitsImpermeable, MidpointInsideObstacle) {
  const World w = square_world(10, {impermeable_rect({4.9, 0}, {5.1, 10})});
  EXPECT_TRUE(segment_hits_impermeable(w, {1, 5}, {9, 5}, 4.0));
}

TEST(SegmentHitsImpermeable, ThinWallCanBeMissedAtCoarseResolution) {
  const double res = 1.0;
  const World w = square_world(10, {impermeable_rect({4.2, 0}, {4.2 + res / 2, 10})});
  EXPECT_FALSE(segment_hits_impermeable(w, {1, 5}, {9, 5}, res));
  EXPECT_TRUE(segment_hits_impermeable(w, {1, 5}, {9, 5}, res / 10));
}

TEST(SegmentHitsImpermeable, RejectsNonPositiveResolution) {
  EXPECT_THROW(segment_hits_impermeable(square_world(10), {1, 1}, {2, 2}, 0.0), std::invalid_argument);
}

TEST(SampleIntervals, CeilWithAtLeastOne) {
  EXPECT_EQ(sample_intervals(0.0, 0.3), 1);
  EXPECT_EQ(sample_intervals(3.0, 0.3), 10);
  EXPECT_EQ(sample_intervals(3.01, 0.3), 11);
}

TEST(World, RejectsInvalidObstacles) {
  EXPECT_THROW(square_world(10, {permeable_rect({20, 20}, {30, 30}, 1)}), std::invalid_argument);
  EXPECT_THROW(square_world(10, {permeable_rect({1, 1}, {2, 2}, 0)}), std::invalid_argument);
  EXPECT_THROW(square_world(10, {permeable_disc({1, 1}, 0, 1)}), std::invalid_argument);
  EXPECT_THROW(square_world(10, {impermeable_rect({2, 2}, {2, 3})}), std::invalid_argument);
  EXPECT_THROW(World(AxisAlignedRect{{0, 0}, {0, 5}}, {}), std::invalid_argument);
}

class WorldProperties : public ::testing::Test {
 protected:
  World world_ = square_world(20, {permeable_rect({2, 2}, {9, 6}, 4), impermeable_rect({8, 5}, {12, 9}),
                                   permeable_disc({15, 15}, 3, 9), impermeable_disc({4, 15}, 2)});
};

TEST_F(WorldProperties, NonFreeImpliesZeroDistanceToSomeShape) {
  Rng rng(3);
  for (int i = 0; i < 5000; ++i) {
    const Point2 p{rng.uniform(0, 20), rng.uniform(0, 20)};
    if (classify_point(world_, p).is_free()) continue;
    bool touching = false;
    for (const auto& o : world_.obstacles()) touching |= distance_to_shape(o.shape, p) == 0.0;
    EXPECT_TRUE(touching);
  }
}

TEST_F(WorldProperties, AddingPermeableNeverChangesImpermeable) {
  auto more = world_.obstacles();
  more.push_back(permeable_rect({0, 0}, {20, 20}, 50));
  const World bigger(world_.bounds(), more);
  Rng rng(5);
  for (int i = 0; i < 5000; ++i) {
    const Point2 p{rng.uniform(0, 20), rng.uniform(0, 20)};
    if (classify_point(world_, p).is_impermeable()) {
      EXPECT_TRUE(classify_point(bigger, p).is_impermeable());
    }
  }
}

TEST(Occupancy, WorstOrdersByKindThenCost) {
  const auto f = Occupancy::free();
  const auto p3 = Occupancy::permeable(3);
  const auto p7 = Occupancy::permeable(7);
  const auto imp = Occupancy::impermeable();
  EXPECT_EQ(Occupancy::worst(f, p3), p3);
  EXPECT_EQ(Occupancy::worst(p7, p3), p7);
  EXPECT_EQ(Occupancy::worst(p7, imp), imp);
  EXPECT_EQ(Occupancy::worst(f, f), f);
}

}  // namespace
}  // namespace apfrrt
