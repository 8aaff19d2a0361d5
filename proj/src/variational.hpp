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

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "quadrature.hpp"
#include "trial.hpp"

namespace h2p {

// The seven 1-D integrals the energy functional is assembled from.  The
// volume element factor (xi^2 - eta^2) expands every 2-D integral into
// products of these.
struct MomentBundle {
  IntegralResult n_xi;   // int X0^2 dxi
  IntegralResult s_xi;   // int xi^2 X0^2 dxi
  IntegralResult m_xi;   // int xi X0^2 dxi
  IntegralResult k_xi;   // int (xi^2-1) X0'^2 dxi
  IntegralResult n_eta;  // int Y0^2 deta
  IntegralResult s_eta;  // int eta^2 Y0^2 deta
  IntegralResult k_eta;  // int (1-eta^2) Y0'^2 deta
  double max_relative_error() const;
};

MomentBundle compute_moments(const TrialParams& params, int order);

struct EnergyResult {
  double e_prime = 0.0;  // electronic energy [Ry]
  double norm = 0.0;     // squared norm without the (R/2)^3 2 pi prefactor
  double quadrature_error = 0.0;
};

// Rayleigh quotient of the two-center Hamiltonian over X0*Y0.  Kinetic part
// in first-derivative (Dirichlet) form with metric weights (xi^2-1) and
// (1-eta^2); the Coulomb attraction reduces to a pure int xi X0^2 * int Y0^2
// term because its Jacobian factor cancels.
EnergyResult energy_expectation(const TrialParams& params, const Geometry& geometry, int order);

struct SolveOptions {
  int quadrature_order = 200;
  long max_evaluations = 400000;
  bool reduced = false;      // freeze a2 = b2 = 0
  bool branch_scan = true;   // sweep gamma candidates; off for warm-started sweeps
};

struct Diagnostics {
  int iterations = 0;
  long evaluations = 0;
  double quadrature_error = 0.0;
  bool converged = false;
};

struct SolveResult {
  StateLabel state;
  double R = 0.0;
  double e_total = 0.0;   // E [Ry], includes the 2/R center repulsion
  double e_prime = 0.0;   // E' = E - 2/R [Ry]
  double p_opt = 0.0;
  TrialParams params;
  double a1x = std::numeric_limits<double>::quiet_NaN();  // filled by corrections
  double a1y = std::numeric_limits<double>::quiet_NaN();
  Diagnostics diagnostics;
};

// Local minimization of the energy over {alpha, gamma, a1, a2, b2, b3, p}
// (five parameters in reduced mode) starting from `init`.  Deterministic:
// simplex, then coordinate and quadratic-model polish, then a fixed-point
// pass aligning p with the converged electronic energy.  Throws
// convergence_error when the evaluation budget runs out.
SolveResult minimize(const Geometry& geometry, const StateLabel& state, const TrialParams& init,
                     const SolveOptions& options = {});

struct CurvePoint {
  double R = 0.0;
  std::optional<SolveResult> result;
  std::string error;
};

// Sweep over an ascending R grid, warm-starting each point from the previous
// converged parameters.  Per-point failures are recorded, not propagated.
std::vector<CurvePoint> curve(const std::vector<double>& grid, const StateLabel& state,
                              const TrialParams& first_init, const SolveOptions& options = {});

}  // namespace h2p
