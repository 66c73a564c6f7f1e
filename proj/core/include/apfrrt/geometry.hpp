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

#include <cmath>
#include <optional>
#include <variant>
#include <vector>

namespace apfrrt {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
};

inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Circle {
  Point2 center;
  double radius = 1.0;

  friend bool operator==(const Circle&, const Circle&) = default;
};

struct AxisAlignedRect {
  Point2 min;
  Point2 max;

  friend bool operator==(const AxisAlignedRect&, const AxisAlignedRect&) = default;
  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
};

using Shape = std::variant<Circle, AxisAlignedRect>;

/// Throws std::invalid_argument unless radius > 0 / min < max componentwise
/// and all coordinates are finite.
void validate_shape(const Shape& shape);

/// Closed-region membership (boundary counts as inside).
bool contains(const Shape& shape, Point2 p);

/// Euclidean distance from p to the closest point of the shape; 0 inside.
double distance_to_shape(const Shape& shape, Point2 p);

/// Unit gradient of distance_to_shape at p, or the zero vector where the
/// distance is zero or its gradient is undefined.
Point2 distance_gradient(const Shape& shape, Point2 p);

bool intersects(const Shape& shape, const AxisAlignedRect& rect);

struct Permeable {
  double cost = 0.0;
  friend bool operator==(const Permeable&, const Permeable&) = default;
};
struct Impermeable {
  friend bool operator==(const Impermeable&, const Impermeable&) = default;
};
using Permeability = std::variant<Permeable, Impermeable>;

struct ObstacleRegion {
  Shape shape;
  Permeability permeability;

  bool is_permeable() const { return std::holds_alternative<Permeable>(permeability); }
  friend bool operator==(const ObstacleRegion&, const ObstacleRegion&) = default;
};

/// Result of classifying a point or configuration against the obstacle set.
class Occupancy {
 public:
  enum class Kind { kFree, kPermeable, kImpermeable };

  static Occupancy free() { return Occupancy(Kind::kFree, 0.0); }
  static Occupancy permeable(double cost) { return Occupancy(Kind::kPermeable, cost); }
  static Occupancy impermeable() { return Occupancy(Kind::kImpermeable, 0.0); }

  Kind kind() const { return kind_; }
  bool is_free() const { return kind_ == Kind::kFree; }
  bool is_permeable() const { return kind_ == Kind::kPermeable; }
  bool is_impermeable() const { return kind_ == Kind::kImpermeable; }

  /// Collision cost of a valid configuration: the permeable cost, else 0.
  double cost() const { return cost_; }

  /// Dominance merge: Impermeable > Permeable (max cost) > Free.
  static Occupancy worst(const Occupancy& a, const Occupancy& b);

  friend bool operator==(const Occupancy&, const Occupancy&) = default;

 private:
  Occupancy(Kind kind, double cost) : kind_(kind), cost_(cost) {}
  Kind kind_;
  double cost_;
};

/// Per-class nearest distances. A field is absent when the class is empty.
struct ClassDistances {
  std::optional<double> permeable;
  std::optional<double> impermeable;
};

/// Per-class nearest distances with their workspace gradients.
struct ClassDistanceGradients {
  ClassDistances distance;
  Point2 permeable_gradient;
  Point2 impermeable_gradient;
};

class World {
 public:
  /// Validates bounds, shapes, permeable costs (> 0) and that every obstacle
  /// touches the bounds. Throws std::invalid_argument.
  World(AxisAlignedRect bounds, std::vector<ObstacleRegion> obstacles);

  const AxisAlignedRect& bounds() const { return bounds_; }
  const std::vector<ObstacleRegion>& obstacles() const { return obstacles_; }

  friend bool operator==(const World&, const World&) = default;

 private:
  AxisAlignedRect bounds_;
  std::vector<ObstacleRegion> obstacles_;
};

Occupancy classify_point(const World& world, Point2 p);

ClassDistances min_distance_per_class(const World& world, Point2 p);

/// min_distance_per_class plus the gradient of each minimum, taken from the
/// nearest shape of that class (lowest index on ties).
ClassDistanceGradients min_distance_gradients(const World& world, Point2 p);

/// Samples [a, b] at spacing <= resolution, endpoints included, and reports
/// whether any sample is Impermeable. Walls thinner than the resolution can
/// be missed.
bool segment_hits_impermeable(const World& world, Point2 a, Point2 b, double resolution);

/// Number of intervals used to sample a segment of the given length.
int sample_intervals(double length, double resolution);

}  // namespace apfrrt
