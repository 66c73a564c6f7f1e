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

#include <memory>
#include <string>
#include <vector>

#include "apfrrt/environment.hpp"
#include "apfrrt/geometry.hpp"

namespace apfrrt::testing {

inline std::string scenario_path(const std::string& name) {
  return std::string(APFRRT_SCENARIO_DIR) + "/" + name;
}

inline ObstacleRegion permeable_rect(Point2 lo, Point2 hi, double cost) {
  return {AxisAlignedRect{lo, hi}, Permeable{cost}};
}

inline ObstacleRegion impermeable_rect(Point2 lo, Point2 hi) {
  return {AxisAlignedRect{lo, hi}, Impermeable{}};
}

inline ObstacleRegion permeable_disc(Point2 c, double r, double cost) {
  return {Circle{c, r}, Permeable{cost}};
}

inline ObstacleRegion impermeable_disc(Point2 c, double r) { return {Circle{c, r}, Impermeable{}}; }

inline World square_world(double side, std::vector<ObstacleRegion> obstacles = {}) {
  return World(AxisAlignedRect{{0.0, 0.0}, {side, side}}, std::move(obstacles));
}

inline std::shared_ptr<const PointEnvironment> open_env(Config start, Config goal,
                                                        double side = 100.0) {
  return point2d_env(square_world(side), std::move(start), std::move(goal));
}

/// Two-link unit arm in an empty world.
inline PlanarArm unit_arm() {
  return PlanarArm{{1.0, 1.0}, {0.0, 0.0}, {{-3.0, 3.0}, {-3.0, 3.0}}, 8};
}

}  // namespace apfrrt::testing
