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

#include "apfrrt/config.hpp"
#include "apfrrt/environment.hpp"

namespace apfrrt {

/// Artificial potential field gains.
///
/// U_att = k_att * d_goal^2
/// U_rep = 1/2 * k_rep * (1/d - 1/d_obs_star)^2 for d <= d_obs_star, else 0,
///         summed over the two obstacle classes using each class's nearest
///         distance. d is clamped below at kMinObstacleDistance.
struct PotentialParams {
  double k_att = 50.0;
  double k_rep_perm = 500.0;
  double k_rep_imp = 500.0;
  double d_obs_star = 5.0;
  double beta = 1.0;
  /// Attractive force used to normalise F_total in the blend weight.
  double f_att_max = 1.0;

  /// Throws std::invalid_argument on non-finite or out-of-range values.
  void validate() const;
  friend bool operator==(const PotentialParams&, const PotentialParams&) = default;
};

inline constexpr double kMinObstacleDistance = 1e-3;
inline constexpr double kFiniteDifferenceStep = 1e-5;
inline constexpr double kDirectionEpsilon = 1e-12;

enum class ObstacleClass { kPermeable, kImpermeable };

/// Attractive force magnitude at the start, 2 * k_att * d(start, goal), or 1
/// when that is zero (then F_total never exceeds 0 and the scale is unused).
double attractive_force_scale(const CSpaceEnvironment& env, double k_att);

/// Copy of params with f_att_max set from the environment.
PotentialParams with_attractive_scale(PotentialParams params, const CSpaceEnvironment& env);

double attractive_potential(const PotentialParams& params, double d_goal);

double repulsive_potential(const PotentialParams& params, double d_obs, ObstacleClass cls);

/// dU_rep/dd, zero outside (kMinObstacleDistance, d_obs_star].
double repulsive_potential_slope(const PotentialParams& params, double d_obs, ObstacleClass cls);

/// Everything the extension step needs at one configuration.
struct PotentialSample {
  double u_att = 0.0;
  double u_rep = 0.0;
  double u_tot = 0.0;
  Tangent grad_att;
  Tangent grad_rep;
  Tangent grad_tot;
  double f_total = 0.0;
  double lambda = 1.0;
};

/// U_tot at q.
double total_potential(const CSpaceEnvironment& env, const PotentialParams& params,
                       const Config& q);

/// Potentials, gradients and blend weight at q. Gradients are analytic when
/// the environment provides clearance gradients, else central differences of
/// the potentials with step kFiniteDifferenceStep.
PotentialSample evaluate_potential(const CSpaceEnvironment& env, const PotentialParams& params,
                                   const Config& q);

/// Gradient of U_tot at q.
Tangent potential_gradient(const CSpaceEnvironment& env, const PotentialParams& params,
                           const Config& q);

/// Adaptive blend weight lambda in (0, 1].
///
/// F_total is the signed projection of f_att + f_rep onto the attractive
/// direction (0 when f_att vanishes). lambda = 1 whenever F_total <= 0.
double lambda_weight(const PotentialParams& params, const Tangent& f_att, const Tangent& f_rep);

/// Signed scalar F_total used by lambda_weight.
double total_force_projection(const Tangent& f_att, const Tangent& f_rep);

/// Unit extension direction for the nearest node: normalize(lambda * v_r +
/// (1 - lambda) * v_p), with v_r toward the sample and v_p the normalised
/// negative potential gradient. Falls back to v_r when the gradient or the
/// blend degenerates. Throws std::invalid_argument when q_rand == q_near.
Tangent biased_extend_direction(const CSpaceEnvironment& env, const PotentialParams& params,
                                const Config& q_near, const Config& q_rand);

/// Moves a random sample k times by `step` down the normalised potential
/// gradient, re-evaluating the gradient each time. Stops early on a vanishing
/// gradient or when the next sample would be Impermeable.
Config bias_random_sample(const CSpaceEnvironment& env, const PotentialParams& params,
                          const Config& q_rand, double step, int iters);

}  // namespace apfrrt
