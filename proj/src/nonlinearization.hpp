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

#include "interp.hpp"
#include "variational.hpp"

namespace h2p {

// Perturbation theory built on the logarithm of the trial function.  The
// separated equations are rewritten in Riccati form for the log-derivative;
// inserting the trial's log-derivative on the left-hand side generates an
// unperturbed "potential" (with the zero-order separation constant set to 0),
// and the difference from the true polynomial potential is the perturbation.
// First-order corrections then come from one-dimensional quadratures.

enum class Coordinate { xi, eta };

class RiccatiData {
public:
  RiccatiData(const TrialParams& params, Coordinate coordinate);

  Coordinate coordinate() const { return coordinate_; }
  const TrialParams& params() const { return params_; }
  double A0() const { return 0.0; }

  // Log-derivative of the zero-order factor and its derivative.  For the
  // ungerade eta coordinate these have a pole at the symmetry node.
  double x0(double t) const;
  double x0_prime(double t) const;

  double V(double t) const;   // polynomial potential of the separated equation
  double V0(double t) const;  // generated by the trial phase, bounded perturbation left over
  double V1(double t) const;  // V - V0; finite everywhere including the eta node
  double weight(double t) const;  // squared zero-order factor

private:
  Coordinate coordinate_;
  TrialParams params_;
};

RiccatiData build_riccati(const TrialParams& params, const Geometry& geometry,
                          Coordinate coordinate);

// First-order separation constant: the weighted average of the perturbation
// over the squared zero-order factor.  Each coordinate gets its own value;
// their difference is the consistency diagnostic, not an imposed constraint.
double first_separation_constant(const RiccatiData& riccati, int order);

// Sampled first correction along one coordinate: the log-derivative
// correction and its integrated phase, anchored so the phase vanishes at
// xi = 1 (respectively eta = 0).
struct CorrectionProfile {
  Coordinate coordinate = Coordinate::xi;
  std::vector<double> nodes;
  std::vector<double> correction;  // x1 or y1
  std::vector<double> phase;       // phi1 or rho1
  double a1_used = 0.0;
  double phase_infinity = 0.0;     // xi only: limit of the phase at large xi
  double forward_tail_residual = 0.0;  // closure of the defining integral at the far end
};

CorrectionProfile first_correction(const RiccatiData& riccati, double a1, int order);

double consistency_gap(const SolveResult& result);

// Computes both separation constants for a converged result and stores them
// on it.
void attach_separation_constants(SolveResult& result, int order);

// Trial function dressed with the first-order phase corrections,
// Psi = X0 Y0 exp(-phi1(xi) - rho1(eta)).  Point evaluation interpolates the
// stored profiles monotonically and refuses points beyond them.
class CorrectedWavefunction {
public:
  CorrectedWavefunction(const TrialParams& params, CorrectionProfile xi_profile,
                        CorrectionProfile eta_profile);

  double evaluate(const ProlatePoint& point) const;
  double X(double xi) const;
  double Y(double eta) const;

  // Integration accessors: beyond the stored xi grid the phase is clamped to
  // its limit (the weight there is far below roundoff of any moment).
  double X_clamped(double xi) const;
  double X_derivative_clamped(double xi) const;
  double Y_clamped(double eta) const;
  double Y_derivative_clamped(double eta) const;

  const TrialParams& params() const { return params_; }
  const CorrectionProfile& xi_profile() const { return xi_profile_; }
  const CorrectionProfile& eta_profile() const { return eta_profile_; }

private:
  double phi1_clamped(double xi) const;
  double x1_clamped(double xi) const;
  double rho1_abs(double eta_abs) const;
  double y1_signed(double eta) const;

  TrialParams params_;
  CorrectionProfile xi_profile_;
  CorrectionProfile eta_profile_;
  MonotoneCubic phi1_, x1_;        // on the xi grid
  MonotoneCubic rho1_, y1_;        // on the nonnegative eta half-grid
};

CorrectedWavefunction corrected_trial(const TrialParams& params,
                                      const CorrectionProfile& xi_profile,
                                      const CorrectionProfile& eta_profile);

// Full pipeline from a converged variational result.
CorrectedWavefunction build_corrected(const SolveResult& result, int order);

// Rayleigh quotient with the corrected factors (same moment factorization as
// the plain trial).
double corrected_energy(const CorrectedWavefunction& wavefunction, const Geometry& geometry,
                        int order);

// Re-minimizes the energy over p alone, rebuilding the corrections at every
// sampled p, and compares against the same procedure without corrections.
// Both vertices come from identical parabolic fits so their difference
// isolates the effect of the corrections.
struct PReoptimizeResult {
  double p_uncorrected = 0.0;
  double p_corrected = 0.0;
  double relative_shift = 0.0;
  double e_uncorrected = 0.0;
  double e_corrected = 0.0;
  double energy_shift = 0.0;
};

PReoptimizeResult reoptimize_p(const SolveResult& result, int order);

}  // namespace h2p
