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

#include "apfrrt/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace apfrrt {
namespace {

double gain(const PotentialParams& p, ObstacleClass cls) {
  return cls == ObstacleClass::kPermeable ? p.k_rep_perm : p.k_rep_imp;
}

double repulsive_total(const PotentialParams& p, const ClassDistances& d) {
  double u = 0.0;
  if (d.permeable) u += repulsive_potential(p, *d.permeable, ObstacleClass::kPermeable);
  if (d.impermeable) u += repulsive_potential(p, *d.impermeable, ObstacleClass::kImpermeable);
  return u;
}

// Central differences of f along each raw coordinate.
template <class F>
Tangent central_difference(const Config& q, F&& f) {
  Tangent g(q.dim());
  for (std::size_t i = 0; i < q.dim(); ++i) {
    Config plus = q;
    Config minus = q;
    plus[i] += kFiniteDifferenceStep;
    minus[i] -= kFiniteDifferenceStep;
    g[i] = (f(plus) - f(minus)) / (2.0 * kFiniteDifferenceStep);
  }
  return g;
}

}  // namespace

void PotentialParams::validate() const {
  const bool finite = std::isfinite(k_att) && std::isfinite(k_rep_perm) &&
                      std::isfinite(k_rep_imp) && std::isfinite(d_obs_star) &&
                      std::isfinite(beta) && std::isfinite(f_att_max);
  if (!finite) throw std::invalid_argument("potential parameters must be finite");
  if (k_att < 0.0 || k_rep_perm < 0.0 || k_rep_imp < 0.0) {
    throw std::invalid_argument("potential gains must be >= 0");
  }
  if (!(d_obs_star > 0.0)) throw std::invalid_argument("d_obs_star must be > 0");
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  if (!(f_att_max > 0.0)) throw std::invalid_argument("f_att_max must be > 0");
}

double attractive_force_scale(const CSpaceEnvironment& env, double k_att) {
  const double f = 2.0 * k_att * env.goal_distance(env.start());
  return f > 0.0 ? f : 1.0;
}

PotentialParams with_attractive_scale(PotentialParams params, const CSpaceEnvironment& env) {
  params.f_att_max = attractive_force_scale(env, params.k_att);
  return params;
}

double attractive_potential(const PotentialParams& params, double d_goal) {
  return params.k_att * d_goal * d_goal;
}

double repulsive_potential(const PotentialParams& params, double d_obs, ObstacleClass cls) {
  if (d_obs > params.d_obs_star) return 0.0;
  const double d = std::max(d_obs, kMinObstacleDistance);
  const double diff = 1.0 / d - 1.0 / params.d_obs_star;
  return 0.5 * gain(params, cls) * diff * diff;
}

double repulsive_potential_slope(const PotentialParams& params, double d_obs, ObstacleClass cls) {
  if (d_obs > params.d_obs_star || d_obs <= kMinObstacleDistance) return 0.0;
  return -gain(params, cls) * (1.0 / d_obs - 1.0 / params.d_obs_star) / (d_obs * d_obs);
}

double total_potential(const CSpaceEnvironment& env, const PotentialParams& params,
                       const Config& q) {
  return attractive_potential(params, env.goal_distance(q)) +
         repulsive_total(params, env.clearance_per_class(q));
}

PotentialSample evaluate_potential(const CSpaceEnvironment& env, const PotentialParams& params,
                                   const Config& q) {
  PotentialSample s;
  const std::size_t n = env.dimension();

  if (auto cg = env.clearance_gradients(q)) {
    s.u_att = attractive_potential(params, env.goal_distance(q));
    s.u_rep = repulsive_total(params, cg->distance);
    // d(d_goal^2) = 2 (q - q_goal) for a Euclidean metric.
    s.grad_att = 2.0 * params.k_att * env.difference(q, env.goal());
    s.grad_rep = Tangent(n);
    if (cg->distance.permeable) {
      s.grad_rep +=
          repulsive_potential_slope(params, *cg->distance.permeable, ObstacleClass::kPermeable) *
          cg->permeable;
    }
    if (cg->distance.impermeable) {
      s.grad_rep += repulsive_potential_slope(params, *cg->distance.impermeable,
                                              ObstacleClass::kImpermeable) *
                    cg->impermeable;
    }
  } else {
    const auto u_att = [&](const Config& c) {
      return attractive_potential(params, env.goal_distance(c));
    };
    const auto u_rep = [&](const Config& c) {
      return repulsive_total(params, env.clearance_per_class(c));
    };
    s.u_att = u_att(q);
    s.u_rep = u_rep(q);
    s.grad_att = central_difference(q, u_att);
    s.grad_rep = central_difference(q, u_rep);
  }

  s.u_tot = s.u_att + s.u_rep;
  s.grad_tot = s.grad_att + s.grad_rep;
  const Tangent f_att = -s.grad_att;
  const Tangent f_rep = -s.grad_rep;
  s.f_total = total_force_projection(f_att, f_rep);
  s.lambda = lambda_weight(params, f_att, f_rep);
  return s;
}

Tangent potential_gradient(const CSpaceEnvironment& env, const PotentialParams& params,
                           const Config& q) {
  return evaluate_potential(env, params, q).grad_tot;
}

double total_force_projection(const Tangent& f_att, const Tangent& f_rep) {
  const double att_norm = norm(f_att);
  if (att_norm == 0.0) return 0.0;
  return dot(f_att + f_rep, f_att) / att_norm;
}

double lambda_weight(const PotentialParams& params, const Tangent& f_att, const Tangent& f_rep) {
  const double f_total = total_force_projection(f_att, f_rep);
  if (!(f_total > 0.0)) return 1.0;
  return 1.0 / (params.beta * f_total / params.f_att_max + 1.0);
}

Tangent biased_extend_direction(const CSpaceEnvironment& env, const PotentialParams& params,
                                const Config& q_near, const Config& q_rand) {
  Tangent v_r = env.difference(q_rand, q_near);
  const double r_norm = norm(v_r);
  if (!(r_norm > 0.0)) throw std::invalid_argument("q_rand coincides with q_near");
  v_r *= 1.0 / r_norm;

  const PotentialSample s = evaluate_potential(env, params, q_near);
  if (s.lambda == 1.0) return v_r;

  const double g_norm = norm(s.grad_tot);
  if (g_norm < kDirectionEpsilon) return v_r;
  const Tangent v_p = (-1.0 / g_norm) * s.grad_tot;

  Tangent blended = s.lambda * v_r + (1.0 - s.lambda) * v_p;
  const double b_norm = norm(blended);
  if (b_norm < kDirectionEpsilon) return v_r;
  return (1.0 / b_norm) * blended;
}

Config bias_random_sample(const CSpaceEnvironment& env, const PotentialParams& params,
                          const Config& q_rand, double step, int iters) {
  if (!(step > 0.0)) throw std::invalid_argument("bias step must be > 0");
  if (iters < 0) throw std::invalid_argument("bias iteration count must be >= 0");
  Config q = q_rand;
  for (int i = 0; i < iters; ++i) {
    const Tangent g = potential_gradient(env, params, q);
    const double g_norm = norm(g);
    if (g_norm < kDirectionEpsilon) break;
    const Config next = env.displace(q, (-step / g_norm) * g);
    if (env.classify(next).is_impermeable()) break;
    q = next;
  }
  return q;
}

}  // namespace apfrrt
