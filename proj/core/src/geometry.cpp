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

#include "apfrrt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace apfrrt {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Point2 closest_point(const AxisAlignedRect& r, Point2 p) {
  return {std::clamp(p.x, r.min.x, r.max.x), std::clamp(p.y, r.min.y, r.max.y)};
}

}  // namespace

void validate_shape(const Shape& shape) {
  std::visit(Overloaded{
                 [](const Circle& c) {
                   if (!is_finite(c.center) || !std::isfinite(c.radius) || !(c.radius > 0.0)) {
                     throw std::invalid_argument("circle needs a finite center and radius > 0");
                   }
                 },
                 [](const AxisAlignedRect& r) {
                   if (!is_finite(r.min) || !is_finite(r.max) || !(r.min.x < r.max.x) ||
                       !(r.min.y < r.max.y)) {
                     throw std::invalid_argument("rectangle needs finite corners with min < max");
                   }
                 },
             },
             shape);
}

bool contains(const Shape& shape, Point2 p) {
  return std::visit(Overloaded{
                        [&](const Circle& c) {
                          const double dx = p.x - c.center.x;
                          const double dy = p.y - c.center.y;
                          return dx * dx + dy * dy <= c.radius * c.radius;
                        },
                        [&](const AxisAlignedRect& r) {
                          return p.x >= r.min.x && p.x <= r.max.x && p.y >= r.min.y &&
                                 p.y <= r.max.y;
                        },
                    },
                    shape);
}

double distance_to_shape(const Shape& shape, Point2 p) {
  return std::visit(Overloaded{
                        [&](const Circle& c) {
                          return std::max(0.0, norm(p - c.center) - c.radius);
                        },
                        [&](const AxisAlignedRect& r) { return norm(p - closest_point(r, p)); },
                    },
                    shape);
}

Point2 distance_gradient(const Shape& shape, Point2 p) {
  return std::visit(Overloaded{
                        [&](const Circle& c) -> Point2 {
                          const Point2 d = p - c.center;
                          const double n = norm(d);
                          if (n <= c.radius || n == 0.0) return {};
                          return (1.0 / n) * d;
                        },
                        [&](const AxisAlignedRect& r) -> Point2 {
                          const Point2 d = p - closest_point(r, p);
                          const double n = norm(d);
                          if (n == 0.0) return {};
                          return (1.0 / n) * d;
                        },
                    },
                    shape);
}

bool intersects(const Shape& shape, const AxisAlignedRect& rect) {
  return std::visit(Overloaded{
                        [&](const Circle& c) {
                          return norm(c.center - closest_point(rect, c.center)) <= c.radius;
                        },
                        [&](const AxisAlignedRect& r) {
                          return r.min.x <= rect.max.x && r.max.x >= rect.min.x &&
                                 r.min.y <= rect.max.y && r.max.y >= rect.min.y;
                        },
                    },
                    shape);
}

Occupancy Occupancy::worst(const Occupancy& a, const Occupancy& b) {
  if (a.is_impermeable() || b.is_impermeable()) return impermeable();
  if (a.is_permeable() && b.is_permeable()) return permeable(std::max(a.cost(), b.cost()));
  if (a.is_permeable()) return a;
  return b;
}

World::World(AxisAlignedRect bounds, std::vector<ObstacleRegion> obstacles)
    : bounds_(bounds), obstacles_(std::move(obstacles)) {
  validate_shape(bounds_);
  for (const auto& o : obstacles_) {
    validate_shape(o.shape);
    if (const auto* p = std::get_if<Permeable>(&o.permeability)) {
      if (!std::isfinite(p->cost) || !(p->cost > 0.0)) {
        throw std::invalid_argument("permeable obstacle cost must be finite and > 0");
      }
    }
    if (!intersects(o.shape, bounds_)) {
      throw std::invalid_argument("obstacle lies entirely outside the world bounds");
    }
  }
}

Occupancy classify_point(const World& world, Point2 p) {
  Occupancy result = Occupancy::free();
  for (const auto& o : world.obstacles()) {
    if (!contains(o.shape, p)) continue;
    if (const auto* perm = std::get_if<Permeable>(&o.permeability)) {
      result = Occupancy::worst(result, Occupancy::permeable(perm->cost));
    } else {
      return Occupancy::impermeable();
    }
  }
  return result;
}

ClassDistances min_distance_per_class(const World& world, Point2 p) {
  ClassDistances out;
  for (const auto& o : world.obstacles()) {
    const double d = distance_to_shape(o.shape, p);
    auto& slot = o.is_permeable() ? out.permeable : out.impermeable;
    if (!slot || d < *slot) slot = d;
  }
  return out;
}

ClassDistanceGradients min_distance_gradients(const World& world, Point2 p) {
  ClassDistanceGradients out;
  for (const auto& o : world.obstacles()) {
    const double d = distance_to_shape(o.shape, p);
    const bool perm = o.is_permeable();
    auto& slot = perm ? out.distance.permeable : out.distance.impermeable;
    if (!slot || d < *slot) {
      slot = d;
      (perm ? out.permeable_gradient : out.impermeable_gradient) = distance_gradient(o.shape, p);
    }
  }
  return out;
}

int sample_intervals(double length, double resolution) {
  if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be > 0");
  return std::max(1, static_cast<int>(std::ceil(length / resolution)));
}

bool segment_hits_impermeable(const World& world, Point2 a, Point2 b, double resolution) {
  const int n = sample_intervals(norm(b - a), resolution);
  for (int i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / n;
    if (classify_point(world, a + t * (b - a)).is_impermeable()) return true;
  }
  return false;
}

}  // namespace apfrrt
