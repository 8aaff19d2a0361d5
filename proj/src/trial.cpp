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

#include "trial.hpp"

#include <cmath>

#include "errors.hpp"

namespace h2p {

bool TrialParams::feasible() const {
  if (!(p > 0.0) || !(R > 0.0)) return false;
  if (!(gamma > -1.0)) return false;
  // 1 + b2 t + b3 t^2 > 0 for t = eta^2 in [0, 1].
  const auto denom = [&](double t) { return 1.0 + b2 * t + b3 * t * t; };
  if (!(denom(0.0) > 0.0) || !(denom(1.0) > 0.0)) return false;
  if (b3 != 0.0) {
    const double t_vertex = -b2 / (2.0 * b3);
    if (t_vertex > 0.0 && t_vertex < 1.0 && !(denom(t_vertex) > 0.0)) return false;
  }
  return true;
}

void TrialParams::validate() const {
  if (!feasible()) throw domain_error("trial parameters violate positivity constraints");
}

XiParts eval_xi_parts(const TrialParams& params, double xi) {
  const double sigma = params.gamma + xi;
  if (!(sigma > 0.0)) throw domain_error("eval_X0: gamma + xi must be positive");
  const double p = params.p;
  const double nu = params.R / p - 1.0;
  const double g = xi * (params.alpha + p * xi) / sigma;
  const double kappa = params.gamma * (params.alpha - p * params.gamma);
  const double g1 = p + kappa / (sigma * sigma);
  const double g2 = -2.0 * kappa / (sigma * sigma * sigma);

  XiParts parts;
  parts.value = std::exp(nu * std::log(sigma) - g);
  parts.x0 = g1 - nu / sigma;
  parts.x0_prime = g2 + nu / (sigma * sigma);
  parts.derivative = -parts.x0 * parts.value;
  return parts;
}

double eval_X0(const TrialParams& params, double xi) { return eval_xi_parts(params, xi).value; }

double eval_X0_derivative(const TrialParams& params, double xi) {
  return eval_xi_parts(params, xi).derivative;
}

double log_derivative_X0(const TrialParams& params, double xi) {
  return eval_xi_parts(params, xi).x0;
}

EtaPhaseParts eta_phase_parts(const TrialParams& params, double eta) {
  const double e2 = eta * eta;
  const double D = 1.0 + params.b2 * e2 + params.b3 * e2 * e2;
  if (!(D > 0.0)) throw domain_error("eval_Y0: denominator must stay positive");
  const double p = params.p;
  const double N = eta * (params.a1 + p * params.a2 * e2 + p * params.b3 * e2 * e2);
  const double N1 = params.a1 + 3.0 * p * params.a2 * e2 + 5.0 * p * params.b3 * e2 * e2;
  const double N2 = 6.0 * p * params.a2 * eta + 20.0 * p * params.b3 * e2 * eta;
  const double D1 = 2.0 * params.b2 * eta + 4.0 * params.b3 * e2 * eta;
  const double D2 = 2.0 * params.b2 + 12.0 * params.b3 * e2;

  EtaPhaseParts parts;
  parts.D = D;
  parts.D1 = D1;
  parts.D2 = D2;
  parts.u = N / D;
  parts.u1 = (N1 * D - N * D1) / (D * D);
  parts.u2 = (N2 * D - N * D2) / (D * D) - 2.0 * D1 * parts.u1 / D;
  parts.q = D1 / (4.0 * D);
  parts.q1 = D2 / (4.0 * D) - D1 * D1 / (4.0 * D * D);
  return parts;
}

namespace {

EtaParts eval_eta_nonnegative(const TrialParams& params, double eta) {
  const EtaPhaseParts ph = eta_phase_parts(params, eta);
  const double pre = std::pow(ph.D, -0.25);
  EtaParts parts;
  if (params.state.parity == Parity::gerade) {
    parts.value = pre * std::cosh(ph.u);
    parts.derivative = pre * (ph.u1 * std::sinh(ph.u) - ph.q * std::cosh(ph.u));
  } else {
    parts.value = pre * std::sinh(ph.u);
    parts.derivative = pre * (ph.u1 * std::cosh(ph.u) - ph.q * std::sinh(ph.u));
  }
  return parts;
}

}  // namespace

EtaParts eval_eta_parts(const TrialParams& params, double eta) {
  if (eta >= 0.0) return eval_eta_nonnegative(params, eta);
  EtaParts mirrored = eval_eta_nonnegative(params, -eta);
  if (params.state.parity == Parity::gerade) {
    mirrored.derivative = -mirrored.derivative;
  } else {
    mirrored.value = -mirrored.value;
  }
  return mirrored;
}

double eval_Y0(const TrialParams& params, double eta) { return eval_eta_parts(params, eta).value; }

double eval_Y0_derivative(const TrialParams& params, double eta) {
  return eval_eta_parts(params, eta).derivative;
}

double log_derivative_Y0(const TrialParams& params, double eta) {
  const EtaParts parts = eval_eta_parts(params, eta);
  if (parts.value == 0.0)
    throw singular_error("log_derivative_Y0: evaluation at a node of Y0");
  return -parts.derivative / parts.value;
}

void ReferenceForm::validate() const {
  if (kind == Kind::hund_mulliken) {
    if (!(alpha2 > 0.0)) throw domain_error("reference form requires positive exponents");
  } else {
    if (!(alpha3 > 0.0) || !(alpha4 > 0.0))
      throw domain_error("reference form requires positive exponents");
  }
}

double eval_reference(const ReferenceForm& form, const Geometry& geometry,
                      const ProlatePoint& point) {
  form.validate();
  const double R = geometry.R;
  double xi_exp, eta_arg;
  if (form.kind == ReferenceForm::Kind::hund_mulliken) {
    xi_exp = form.alpha2 * R;
    eta_arg = form.alpha2 * R;
  } else {
    xi_exp = (form.alpha3 + form.alpha4) * R;
    eta_arg = (form.alpha3 - form.alpha4) * R;
  }
  const double axial = form.parity == Parity::gerade ? std::cosh(eta_arg * point.eta)
                                                     : std::sinh(eta_arg * point.eta);
  return 2.0 * std::exp(-xi_exp * point.xi) * axial;
}

double eval_reference_distances(const ReferenceForm& form, double r1, double r2) {
  form.validate();
  const double sign = form.parity == Parity::gerade ? 1.0 : -1.0;
  if (form.kind == ReferenceForm::Kind::hund_mulliken)
    return std::exp(-2.0 * form.alpha2 * r1) + sign * std::exp(-2.0 * form.alpha2 * r2);
  return std::exp(-2.0 * form.alpha3 * r1 - 2.0 * form.alpha4 * r2) +
         sign * std::exp(-2.0 * form.alpha3 * r2 - 2.0 * form.alpha4 * r1);
}

}  // namespace h2p
