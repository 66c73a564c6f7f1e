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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apfrrt/environment.hpp"
#include "apfrrt/potential.hpp"
#include "apfrrt/tree.hpp"

namespace apfrrt {

struct RenderSpec {
  int width = 800;
  int height = 800;
  bool world = true;
  bool tree = true;
  bool path = true;
  bool quiver = false;
  /// Quiver arrows sit on a (quiver_grid + 1)^2 lattice spanning the bounds.
  int quiver_grid = 20;
  std::string output_path;

  /// Canvas at least 100x100, quiver_grid >= 1.
  void validate() const;
};

/// Applies a comma-separated subset of {world, tree, path, quiver}; layers
/// not listed are switched off. Throws std::invalid_argument on unknown names.
void set_layers(RenderSpec& spec, std::string_view list);

/// Deterministic SVG document.
///
/// Point environments draw obstacles, tree edges, the path polyline and an
/// optional quiver of -grad U_tot. Arm environments draw the workspace with
/// the arm at start and goal and the end-effector trace of the path; the tree
/// and quiver layers are rejected there with std::invalid_argument. The
/// quiver layer also needs potential parameters.
std::string render_svg(const CSpaceEnvironment& env, const SearchTree* tree,
                       const std::optional<std::vector<Config>>& path,
                       const PotentialParams* potential, const RenderSpec& spec);

}  // namespace apfrrt
