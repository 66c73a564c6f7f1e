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

#include "apfrrt/svg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace apfrrt {
namespace {

constexpr std::string_view kImpermeableFill = "#3a3a3a";
constexpr std::string_view kPermeableFill = "#b8e0a8";
constexpr std::string_view kTreeStroke = "#9aa4b1";
constexpr std::string_view kPathStroke = "#d62728";
constexpr std::string_view kQuiverStroke = "#1f77b4";

/// World-to-canvas transform with a uniform scale and the y axis flipped.
class Canvas {
 public:
  Canvas(const AxisAlignedRect& bounds, const RenderSpec& spec) : bounds_(bounds) {
    const double w = bounds.max.x - bounds.min.x;
    const double h = bounds.max.y - bounds.min.y;
    scale_ = std::min(spec.width / w, spec.height / h);
    off_x_ = (spec.width - scale_ * w) / 2.0;
    off_y_ = (spec.height - scale_ * h) / 2.0;
  }

  double x(double wx) const { return off_x_ + (wx - bounds_.min.x) * scale_; }
  double y(double wy) const { return off_y_ + (bounds_.max.y - wy) * scale_; }
  double length(double l) const { return l * scale_; }

 private:
  AxisAlignedRect bounds_;
  double scale_ = 1.0;
  double off_x_ = 0.0;
  double off_y_ = 0.0;
};

void line(std::string& out, const Canvas& c, Point2 a, Point2 b) {
  out += fmt::format("<line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\"/>\n", c.x(a.x),
                     c.y(a.y), c.x(b.x), c.y(b.y));
}

void polyline(std::string& out, const Canvas& c, const std::vector<Point2>& pts) {
  out += "<polyline fill=\"none\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out += fmt::format("{}{:.3f},{:.3f}", i ? " " : "", c.x(pts[i].x), c.y(pts[i].y));
  }
  out += "\"/>\n";
}

void marker(std::string& out, const Canvas& c, Point2 p, std::string_view id,
            std::string_view fill) {
  out += fmt::format(
      "<circle id=\"{}\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"6.000\" fill=\"{}\" stroke=\"#000000\" "
      "stroke-width=\"1.000\"/>\n",
      id, c.x(p.x), c.y(p.y), fill);
}

void world_layer(std::string& out, const Canvas& c, const World& world) {
  const auto& b = world.bounds();
  out += "<g id=\"world\">\n";
  out += fmt::format(
      "<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"#ffffff\" "
      "stroke=\"#000000\" stroke-width=\"1.000\"/>\n",
      c.x(b.min.x), c.y(b.max.y), c.length(b.max.x - b.min.x), c.length(b.max.y - b.min.y));
  for (const auto& o : world.obstacles()) {
    const std::string_view fill = o.is_permeable() ? kPermeableFill : kImpermeableFill;
    const std::string_view cls = o.is_permeable() ? "permeable" : "impermeable";
    if (const auto* circle = std::get_if<Circle>(&o.shape)) {
      out += fmt::format(
          "<circle class=\"{}\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.3f}\" fill=\"{}\"/>\n", cls,
          c.x(circle->center.x), c.y(circle->center.y), c.length(circle->radius), fill);
    } else {
      const auto& r = std::get<AxisAlignedRect>(o.shape);
      out += fmt::format(
          "<rect class=\"{}\" x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\" "
          "fill=\"{}\"/>\n",
          cls, c.x(r.min.x), c.y(r.max.y), c.length(r.max.x - r.min.x),
          c.length(r.max.y - r.min.y), fill);
    }
  }
  out += "</g>\n";
}

Point2 as_point(const Config& q) { return {q[0], q[1]}; }

}  // namespace

void RenderSpec::validate() const {
  if (width < 100 || height < 100) throw std::invalid_argument("canvas must be at least 100x100");
  if (quiver_grid < 1) throw std::invalid_argument("quiver_grid must be >= 1");
}

void set_layers(RenderSpec& spec, std::string_view list) {
  spec.world = spec.tree = spec.path = spec.quiver = false;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    const std::string_view name = list.substr(pos, comma - pos);
    if (name == "world") {
      spec.world = true;
    } else if (name == "tree") {
      spec.tree = true;
    } else if (name == "path") {
      spec.path = true;
    } else if (name == "quiver") {
      spec.quiver = true;
    } else if (!name.empty()) {
      throw std::invalid_argument(fmt::format("unknown layer '{}'", name));
    }
    pos = comma + 1;
  }
}

std::string render_svg(const CSpaceEnvironment& env, const SearchTree* tree,
                       const std::optional<std::vector<Config>>& path,
                       const PotentialParams* potential, const RenderSpec& spec) {
  spec.validate();
  const auto* arm_env = dynamic_cast<const ArmEnvironment*>(&env);
  if (!arm_env && env.dimension() != 2) {
    throw std::invalid_argument("rendering needs a 2-D point or planar arm environment");
  }
  if (arm_env && spec.tree) throw std::invalid_argument("tree layer is not drawn for arm environments");
  if (arm_env && spec.quiver) {
    throw std::invalid_argument("quiver layer is not drawn for arm environments");
  }
  if (spec.quiver && !potential) throw std::invalid_argument("quiver layer needs potential parameters");

  const World& world = env.world();
  const Canvas c(world.bounds(), spec);
  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n",
      spec.width, spec.height);

  if (spec.world) world_layer(out, c, world);

  if (spec.tree && tree && tree->size() > 1) {
    out += fmt::format("<g id=\"tree\" stroke=\"{}\" stroke-width=\"0.600\">\n", kTreeStroke);
    for (const TreeNode& n : tree->nodes()) {
      if (n.parent) line(out, c, as_point(tree->node(*n.parent).config), as_point(n.config));
    }
    out += "</g>\n";
  }

  if (spec.quiver) {
    const auto& b = world.bounds();
    const double sx = (b.max.x - b.min.x) / spec.quiver_grid;
    const double sy = (b.max.y - b.min.y) / spec.quiver_grid;
    const double arrow = 0.4 * std::min(sx, sy);
    out += fmt::format("<g id=\"quiver\" stroke=\"{}\" stroke-width=\"1.000\">\n", kQuiverStroke);
    for (int j = 0; j <= spec.quiver_grid; ++j) {
      for (int i = 0; i <= spec.quiver_grid; ++i) {
        const Point2 p{b.min.x + i * sx, b.min.y + j * sy};
        const Tangent g = potential_gradient(env, *potential, Config{p.x, p.y});
        const double n = norm(g);
        Point2 tip = p;
        if (n > kDirectionEpsilon) tip = p + arrow * Point2{-g[0] / n, -g[1] / n};
        line(out, c, p, tip);
      }
    }
    out += "</g>\n";
  }

  if (arm_env) {
    const PlanarArm& arm = arm_env->arm();
    const auto joints = [&](const Config& q) {
      const auto pts = forward_kinematics_unchecked(arm, q);
      std::vector<Point2> out_pts{pts.front()};
      for (std::size_t k = 1; k <= arm.link_lengths.size(); ++k) {
        out_pts.push_back(pts[k * static_cast<std::size_t>(arm.samples_per_link)]);
      }
      return out_pts;
    };
    if (spec.path && path) {
      std::vector<Point2> trace;
      for (const Config& q : *path) trace.push_back(forward_kinematics_unchecked(arm, q).back());
      out += fmt::format(
          "<g id=\"path\" stroke=\"{}\" stroke-width=\"2.500\" stroke-linejoin=\"round\">\n",
          kPathStroke);
      polyline(out, c, trace);
      out += "</g>\n";
    }
    out += "<g id=\"arm\" stroke-width=\"3.000\" stroke-linecap=\"round\">\n";
    out += "<g stroke=\"#2ca02c\">\n";
    polyline(out, c, joints(env.start()));
    out += "</g>\n<g stroke=\"#9467bd\">\n";
    polyline(out, c, joints(env.goal()));
    out += "</g>\n</g>\n";
    out += "<g id=\"markers\">\n";
    marker(out, c, forward_kinematics_unchecked(arm, env.start()).back(), "start", "#2ca02c");
    marker(out, c, arm_env->goal_pose(), "goal", "#9467bd");
    out += "</g>\n";
  } else {
    if (spec.path && path) {
      std::vector<Point2> pts;
      for (const Config& q : *path) pts.push_back(as_point(q));
      out += fmt::format(
          "<g id=\"path\" stroke=\"{}\" stroke-width=\"2.500\" stroke-linejoin=\"round\">\n",
          kPathStroke);
      polyline(out, c, pts);
      out += "</g>\n";
    }
    out += "<g id=\"markers\">\n";
    marker(out, c, as_point(env.start()), "start", "#2ca02c");
    marker(out, c, as_point(env.goal()), "goal", "#9467bd");
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace apfrrt
