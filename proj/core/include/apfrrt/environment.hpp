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
#include <optional>
#include <vector>

#include "apfrrt/config.hpp"
#include "apfrrt/geometry.hpp"
#include "apfrrt/random.hpp"

namespace apfrrt {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Per-class clearance of a configuration with its C-space gradients.
struct ClearanceGradients {
  ClassDistances distance;
  Tangent permeable;
  Tangent impermeable;
};

/// The configuration-space contract shared by the planner and the potential
/// field. Implementations are immutable after construction, so one instance
/// can serve many concurrent planners.
class CSpaceEnvironment {
 public:
  virtual ~CSpaceEnvironment() = default;

  std::size_t dimension() const { return bounds_.size(); }
  const std::vector<Interval>& bounds() const { return bounds_; }
  const Config& start() const { return start_; }
  const Config& goal() const { return goal_; }
  const World& world() const { return world_; }

  /// Uniform sample over bounds with Impermeable rejection. Each attempt draws
  /// dimension() values in coordinate order.
  Config sample_free(Rng& rng) const;

  virtual double distance(const Config& a, const Config& b) const = 0;

  /// Shortest displacement taking `from` to `to` under the C-space topology.
  virtual Tangent difference(const Config& to, const Config& from) const = 0;

  /// q + v mapped back into the valid representation (clamped / wrapped).
  virtual Config displace(const Config& q, const Tangent& v) const = 0;

  virtual Occupancy classify(const Config& q) const = 0;

  /// Per-class workspace clearance; total over raw coordinates, so it may be
  /// evaluated slightly outside the bounds (finite differences do this).
  virtual ClassDistances clearance_per_class(const Config& q) const = 0;

  /// Analytic clearance gradients when available; absent means callers
  /// differentiate numerically.
  virtual std::optional<ClearanceGradients> clearance_gradients(const Config& q) const;

  Config interpolate(const Config& a, const Config& b, double t) const;

  double goal_distance(const Config& q) const { return distance(q, goal_); }

  /// True when any sample along the edge (spacing <= resolution, endpoints
  /// included) classifies Impermeable.
  virtual bool edge_hits_impermeable(const Config& a, const Config& b, double resolution) const;

  bool within_bounds(const Config& q) const;

 protected:
  CSpaceEnvironment(std::vector<Interval> bounds, World world, Config start, Config goal);

  /// Bounds and non-Impermeable checks for start and goal; derived constructors
  /// call this once classify() is usable.
  void validate_endpoints() const;

 private:
  std::vector<Interval> bounds_;
  World world_;
  Config start_;
  Config goal_;
};

/// 2-D point robot in the plane: Euclidean metric, clamped to bounds.
class PointEnvironment final : public CSpaceEnvironment {
 public:
  PointEnvironment(World world, Config start, Config goal);

  double distance(const Config& a, const Config& b) const override;
  Tangent difference(const Config& to, const Config& from) const override;
  Config displace(const Config& q, const Tangent& v) const override;
  Occupancy classify(const Config& q) const override;
  ClassDistances clearance_per_class(const Config& q) const override;
  std::optional<ClearanceGradients> clearance_gradients(const Config& q) const override;
  bool edge_hits_impermeable(const Config& a, const Config& b, double resolution) const override;
};

std::shared_ptr<const PointEnvironment> point2d_env(World world, Config start, Config goal);

struct PlanarArm {
  std::vector<double> link_lengths;
  Point2 base;
  std::vector<Interval> joint_limits;
  int samples_per_link = 8;

  /// At least two links, positive lengths, limits inside (-pi, pi].
  void validate() const;
  friend bool operator==(const PlanarArm&, const PlanarArm&) = default;
};

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

/// Workspace points along the arm: the base, then samples_per_link evenly
/// spaced points on each link ending at its distal joint. The last point is
/// the end effector. Throws std::out_of_range on a joint-limit violation.
std::vector<Point2> forward_kinematics(const PlanarArm& arm, const Config& q);

/// forward_kinematics without the joint-limit check.
std::vector<Point2> forward_kinematics_unchecked(const PlanarArm& arm, const Config& q);

/// Planar serial arm. Joint-space metric is Euclidean over wrapped angle
/// differences; classification is the worst over the sampled link points.
class ArmEnvironment final : public CSpaceEnvironment {
 public:
  ArmEnvironment(PlanarArm arm, World world, Config start, Point2 goal_pose, Config goal_config);

  const PlanarArm& arm() const { return arm_; }
  Point2 goal_pose() const { return goal_pose_; }

  double distance(const Config& a, const Config& b) const override;
  Tangent difference(const Config& to, const Config& from) const override;
  Config displace(const Config& q, const Tangent& v) const override;
  Occupancy classify(const Config& q) const override;
  ClassDistances clearance_per_class(const Config& q) const override;

 private:
  PlanarArm arm_;
  Point2 goal_pose_;
};

std::shared_ptr<const ArmEnvironment> arm_env(PlanarArm arm, World world, Config start,
                                              Point2 goal_pose, Config goal_config);

/// from + delta * direction, mapped into the environment. The direction must
/// be a unit vector (within 1e-9); throws std::invalid_argument otherwise.
Config steer(const CSpaceEnvironment& env, const Config& from, const Tangent& direction,
             double delta);

}  // namespace apfrrt
