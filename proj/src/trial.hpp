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

#pragma once

#include "prolate.hpp"

namespace h2p {

// The seven variational parameters of the product trial function at fixed R:
//
//   X0(xi)  = (gamma + xi)^(R/p - 1) * exp(-xi (alpha + p xi) / (gamma + xi))
//   Y0(eta) = (1 + b2 eta^2 + b3 eta^4)^(-1/4) * C(u(eta)),
//             u = eta (a1 + p a2 eta^2 + p b3 eta^4) / (1 + b2 eta^2 + b3 eta^4)
//
// with C = cosh for gerade and C = sinh for ungerade states.  The form bakes
// in the exact growing large-distance phase terms (linear and logarithmic in
// xi, linear in eta) while staying smooth near the origin of each coordinate.
struct TrialParams {
  double alpha = 1.0;
  double gamma = 1.0;
  double a1 = 1.0;
  double a2 = 0.0;
  double b2 = 0.0;
  double b3 = 0.0;
  double p = 1.0;
  StateLabel state = StateLabel::sigma_g();
  double R = 2.0;

  // Denominator positivity on [-1, 1], gamma + xi > 0 for xi >= 1, p > 0.
  bool feasible() const;
  void validate() const;  // throws domain_error on violation
};

// X0 and its first two logarithmic derivatives at one point:
//   x0 = -d log X0 / dxi, x0p = d x0 / dxi (analytic, no finite differences).
struct XiParts {
  double value;
  double derivative;
  double x0;
  double x0_prime;
};

XiParts eval_xi_parts(const TrialParams& params, double xi);
double eval_X0(const TrialParams& params, double xi);
double eval_X0_derivative(const TrialParams& params, double xi);
double log_derivative_X0(const TrialParams& params, double xi);

// Pieces of the eta phase shared by evaluation and the perturbation stage:
// D and u with their eta-derivatives, and q = D'/(4D) with its derivative.
struct EtaPhaseParts {
  double D, D1, D2;
  double u, u1, u2;
  double q, q1;
};

EtaPhaseParts eta_phase_parts(const TrialParams& params, double eta);

struct EtaParts {
  double value;
  double derivative;
};

// Evaluation mirrors eta < 0 through the parity relation, so the symmetry
// identities hold exactly in floating point.
EtaParts eval_eta_parts(const TrialParams& params, double eta);
double eval_Y0(const TrialParams& params, double eta);
double eval_Y0_derivative(const TrialParams& params, double eta);

// y0 = -d log Y0 / deta.  For ungerade states this has a simple pole at the
// symmetry node eta = 0; evaluation exactly there throws singular_error.
double log_derivative_Y0(const TrialParams& params, double eta);

// Classic two-exponential reference forms used as structural anchors and
// accuracy baselines.
struct ReferenceForm {
  enum class Kind { hund_mulliken, guillemin_zener };
  Kind kind = Kind::hund_mulliken;
  Parity parity = Parity::gerade;
  double alpha2 = 1.0;            // hund_mulliken exponent
  double alpha3 = 1.0, alpha4 = 1.0;  // guillemin_zener exponents
  void validate() const;
};

// Prolate-coordinate form, 2 e^{-c xi} cosh/sinh(d eta).
double eval_reference(const ReferenceForm& form, const Geometry& geometry,
                      const ProlatePoint& point);
// Distance form, e^{-2 a r1} +/- e^{-2 a r2} and its two-exponent variant.
double eval_reference_distances(const ReferenceForm& form, double r1, double r2);

}  // namespace h2p
