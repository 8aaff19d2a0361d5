// Copyright 2026 The h2plus developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "observables.hpp"

#include <algorithm>
#include <cmath>

namespace h2p {

double dipole_q(const SolveResult& gerade, const SolveResult& ungerade, int order) {
  if (gerade.R != ungerade.R) throw usage_error("dipole_q: results at different R");
  if (gerade.state != StateLabel::sigma_g() || ungerade.state != StateLabel::sigma_u())
    throw usage_error("dipole_q: expects a (1ssg, 2psu) pair");
  const double R = gerade.R;

  // z = (R/2) xi eta; with the (xi^2 - eta^2) volume factor the integrand
  // splits as xi^3 eta - xi eta^3.
  const double p_sum = 0.5 * (gerade.params.p + ungerade.params.p);
  const QuadratureRule xi_rule =
      refined_rule(semi_infinite_rule(order, 1.0 / std::clamp(p_sum, 1e-3, 1e3)));
  const QuadratureRule eta_rule = refined_rule(gauss_rule(order));

  long double cross_m1 = 0, cross_m3 = 0;
  for (std::size_t i = 0; i < xi_rule.nodes.size(); ++i) {
    const double xi = xi_rule.nodes[i];
    const double w = xi_rule.weights[i];
    const double product = eval_X0(gerade.params, xi) * eval_X0(ungerade.params, xi);
    cross_m1 += static_cast<long double>(w) * xi * product;
    cross_m3 += static_cast<long double>(w) * xi * xi * xi * product;
  }
  long double cross_t1 = 0, cross_t3 = 0;
  for (std::size_t i = 0; i < eta_rule.nodes.size(); ++i) {
    const double eta = eta_rule.nodes[i];
    const double w = eta_rule.weights[i];
    const double product = eval_Y0(gerade.params, eta) * eval_Y0(ungerade.params, eta);
    cross_t1 += static_cast<long double>(w) * eta * product;
    cross_t3 += static_cast<long double>(w) * eta * eta * eta * product;
  }

  const auto squared_norm = [&](const TrialParams& params) {
    const MomentBundle b = compute_moments(params, order);
    return b.s_xi.value * b.n_eta.value - b.n_xi.value * b.s_eta.value;
  };
  const double norm_g = squared_norm(gerade.params);
  const double norm_u = squared_norm(ungerade.params);
  if (!(norm_g > 0.0) || !(norm_u > 0.0)) throw domain_error("dipole_q: non-positive norm");

  const double overlap_weighted = static_cast<double>(cross_m3) * static_cast<double>(cross_t1) -
                                  static_cast<double>(cross_m1) * static_cast<double>(cross_t3);
  return 0.5 * R * overlap_weighted / std::sqrt(norm_g * norm_u);
}

TransitionResult oscillator_strength(const SolveResult& gerade, const SolveResult& ungerade,
                                     int order) {
  TransitionResult t;
  t.R = gerade.R;
  t.e_g = gerade.e_total;
  t.e_u = ungerade.e_total;
  t.delta_e = ungerade.e_total - gerade.e_total;
  t.q_z = dipole_q(gerade, ungerade, order);
  t.f01 = (2.0 / 3.0) * t.delta_e * t.q_z * t.q_z;
  return t;
}

}  // namespace h2p
