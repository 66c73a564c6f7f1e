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

#include "apfrrt/environment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace apfrrt {
namespace {

constexpr int kMaxRejections = 1'000'000;
constexpr double kGoalPoseTolerance = 1e-3;

Point2 as_point(const Config& q) { return {q[0], q[1]}; }

std::vector<Interval> rect_bounds(const AxisAlignedRect& r) {
  return {{r.min.x, r.max.x}, {r.min.y, r.max.y}};
}

void min_into(std::optional<double>& slot, const std::optional<double>& d) {
  if (d && (!slot || *d < *slot)) slot = d;
}

}  // namespace

// ---------------------------------------------------------------------------
// CSpaceEnvironment

CSpaceEnvironment::CSpaceEnvironment(std::vector<Interval> bounds, World world, Config start,
                                     Config goal)
    : bounds_(std::move(bounds)),
      world_(std::move(world)),
      start_(std::move(start)),
      goal_(std::move(goal)) {
  for (const auto& b : bounds_) {
    if (!std::isfinite(b.lo) || !std::isfinite(b.hi) || !(b.lo < b.hi)) {
      throw std::invalid_argument("C-space bounds must be finite and non-degenerate");
    }
  }
  if (start_.dim() != bounds_.size() || goal_.dim() != bounds_.size()) {
    throw std::invalid_argument("start/goal dimension does not match the environment");
  }
  if (!start_.all_finite() || !goal_.all_finite()) {
    throw std::invalid_argument("start/goal must be finite");
  }
}

void CSpaceEnvironment::validate_endpoints() const {
  if (!within_bounds(start_)) throw std::invalid_argument("start lies outside the bounds");
  if (!within_bounds(goal_)) throw std::invalid_argument("goal lies outside the bounds");
  if (classify(start_).is_impermeable()) {
    throw std::invalid_argument("start lies inside an impermeable obstacle");
  }
  if (classify(goal_).is_impermeable()) {
    throw std::invalid_argument("goal lies inside an impermeable obstacle");
  }
}

Config CSpaceEnvironment::sample_free(Rng& rng) const {
  Config q(dimension());
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    for (std::size_t i = 0; i < dimension(); ++i) q[i] = rng.uniform(bounds_[i].lo, bounds_[i].hi);
    if (!classify(q).is_impermeable()) return q;
  }
  throw std::runtime_error("sample_free: free space appears to be empty");
}

std::optional<ClearanceGradients> CSpaceEnvironment::clearance_gradients(const Config&) const {
  return std::nullopt;
}

Config CSpaceEnvironment::interpolate(const Config& a, const Config& b, double t) const {
  return displace(a, t * difference(b, a));
}

bool CSpaceEnvironment::edge_hits_impermeable(const Config& a, const Config& b,
                                              double resolution) const {
  const int n = sample_intervals(distance(a, b), resolution);
  for (int i = 0; i <= n; ++i) {
    if (classify(interpolate(a, b, static_cast<double>(i) / n)).is_impermeable()) return true;
  }
  return false;
}

bool CSpaceEnvironment::within_bounds(const Config& q) const {
  if (q.dim() != dimension()) return false;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (!(q[i] >= bounds_[i].lo && q[i] <= bounds_[i].hi)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// PointEnvironment

PointEnvironment::PointEnvironment(World world, Config start, Config goal)
    : CSpaceEnvironment(rect_bounds(world.bounds()), world, std::move(start), std::move(goal)) {
  validate_endpoints();
}

double PointEnvironment::distance(const Config& a, const Config& b) const {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

Tangent PointEnvironment::difference(const Config& to, const Config& from) const {
  return coordinate_difference(to, from);
}

Config PointEnvironment::displace(const Config& q, const Tangent& v) const {
  Config r = coordinate_offset(q, v);
  for (std::size_t i = 0; i < 2; ++i) r[i] = std::clamp(r[i], bounds()[i].lo, bounds()[i].hi);
  return r;
}

Occupancy PointEnvironment::classify(const Config& q) const {
  return classify_point(world(), as_point(q));
}

ClassDistances PointEnvironment::clearance_per_class(const Config& q) const {
  return min_distance_per_class(world(), as_point(q));
}

std::optional<ClearanceGradients> PointEnvironment::clearance_gradients(const Config& q) const {
  const auto g = min_distance_gradients(world(), as_point(q));
  return ClearanceGradients{g.distance,
                            Tangent{g.permeable_gradient.x, g.permeable_gradient.y},
                            Tangent{g.impermeable_gradient.x, g.impermeable_gradient.y}};
}

bool PointEnvironment::edge_hits_impermeable(const Config& a, const Config& b,
                                             double resolution) const {
  return segment_hits_impermeable(world(), as_point(a), as_point(b), resolution);
}

std::shared_ptr<const PointEnvironment> point2d_env(World world, Config start, Config goal) {
  return std::make_shared<const PointEnvironment>(std::move(world), std::move(start),
                                                  std::move(goal));
}

// ---------------------------------------------------------------------------
// Planar arm

double wrap_angle(double a) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double r = std::fmod(a, kTwoPi);
  if (r <= -std::numbers::pi) r += kTwoPi;
  if (r > std::numbers::pi) r -= kTwoPi;
  return r;
}

void PlanarArm::validate() const {
  if (link_lengths.size() < 2) throw std::invalid_argument("arm needs at least two links");
  if (link_lengths.size() > kMaxDimension) throw std::invalid_argument("arm has too many links");
  for (double l : link_lengths) {
    if (!std::isfinite(l) || !(l > 0.0)) throw std::invalid_argument("link lengths must be > 0");
  }
  if (joint_limits.size() != link_lengths.size()) {
    throw std::invalid_argument("one joint limit interval per link is required");
  }
  for (const auto& lim : joint_limits) {
    if (!(lim.lo < lim.hi) || !(lim.lo >= -std::numbers::pi) || !(lim.hi <= std::numbers::pi)) {
      throw std::invalid_argument("joint limits must satisfy -pi <= lo < hi <= pi");
    }
  }
  if (samples_per_link < 1) throw std::invalid_argument("samples_per_link must be >= 1");
  if (!is_finite(base)) throw std::invalid_argument("arm base must be finite");
}

std::vector<Point2> forward_kinematics_unchecked(const PlanarArm& arm, const Config& q) {
  std::vector<Point2> pts;
  pts.reserve(1 + arm.link_lengths.size() * static_cast<std::size_t>(arm.samples_per_link));
  Point2 joint = arm.base;
  pts.push_back(joint);
  double heading = 0.0;
  for (std::size_t i = 0; i < arm.link_lengths.size(); ++i) {
    heading += q[i];
    const Point2 dir{std::cos(heading), std::sin(heading)};
    for (int s = 1; s <= arm.samples_per_link; ++s) {
      const double t = arm.link_lengths[i] * s / arm.samples_per_link;
      pts.push_back(joint + t * dir);
    }
    joint = pts.back();
  }
  return pts;
}

std::vector<Point2> forward_kinematics(const PlanarArm& arm, const Config& q) {
  if (q.dim() != arm.link_lengths.size()) {
    throw std::invalid_argument("configuration dimension does not match the arm");
  }
  for (std::size_t i = 0; i < q.dim(); ++i) {
    if (!(q[i] >= arm.joint_limits[i].lo && q[i] <= arm.joint_limits[i].hi)) {
      throw std::out_of_range("joint " + std::to_string(i) + " violates its limits");
    }
  }
  return forward_kinematics_unchecked(arm, q);
}

ArmEnvironment::ArmEnvironment(PlanarArm arm, World world, Config start, Point2 goal_pose,
                               Config goal_config)
    : CSpaceEnvironment((arm.validate(), arm.joint_limits), std::move(world), std::move(start),
                        std::move(goal_config)),
      arm_(std::move(arm)),
      goal_pose_(goal_pose) {
  validate_endpoints();
  const Point2 tip = forward_kinematics(arm_, goal()).back();
  if (norm(tip - goal_pose_) > kGoalPoseTolerance) {
    throw std::invalid_argument("goal configuration does not reach the goal pose");
  }
}

double ArmEnvironment::distance(const Config& a, const Config& b) const {
  return norm(difference(a, b));
}

Tangent ArmEnvironment::difference(const Config& to, const Config& from) const {
  Tangent d(to.dim());
  for (std::size_t i = 0; i < to.dim(); ++i) d[i] = wrap_angle(to[i] - from[i]);
  return d;
}

Config ArmEnvironment::displace(const Config& q, const Tangent& v) const {
  Config r(q.dim());
  for (std::size_t i = 0; i < q.dim(); ++i) {
    r[i] = std::clamp(wrap_angle(q[i] + v[i]), bounds()[i].lo, bounds()[i].hi);
  }
  return r;
}

Occupancy ArmEnvironment::classify(const Config& q) const {
  Occupancy worst = Occupancy::free();
  for (const Point2& p : forward_kinematics_unchecked(arm_, q)) {
    worst = Occupancy::worst(worst, classify_point(world(), p));
    if (worst.is_impermeable()) break;
  }
  return worst;
}

ClassDistances ArmEnvironment::clearance_per_class(const Config& q) const {
  ClassDistances out;
  for (const Point2& p : forward_kinematics_unchecked(arm_, q)) {
    const auto d = min_distance_per_class(world(), p);
    min_into(out.permeable, d.permeable);
    min_into(out.impermeable, d.impermeable);
  }
  return out;
}

std::shared_ptr<const ArmEnvironment> arm_env(PlanarArm arm, World world, Config start,
                                              Point2 goal_pose, Config goal_config) {
  return std::make_shared<const ArmEnvironment>(std::move(arm), std::move(world),
                                                std::move(start), goal_pose,
                                                std::move(goal_config));
}

// ---------------------------------------------------------------------------

Config steer(const CSpaceEnvironment& env, const Config& from, const Tangent& direction,
             double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("steer: delta must be > 0");
  const double n = norm(direction);
  if (!(std::abs(n - 1.0) <= 1e-9)) {
    throw std::invalid_argument("steer: direction must be a unit vector");
  }
  return env.displace(from, delta * direction);
}

}  // namespace apfrrt
