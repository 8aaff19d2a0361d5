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

#include <functional>
#include <vector>

#include "prolate.hpp"

namespace h2p {

// Independent high-accuracy solver of the separated two-center problem,
// used as ground truth for the variational results.  Both separated
// equations share the form
//
//   (t^2 - 1) u'' + 2 t u' + (-p^2 t^2 + 2 R t + A) u = 0
//
// (R = 0 for the angular coordinate).  Solutions start from truncated power
// series at the regular singular endpoints and advance by adaptive
// Taylor-series steps; the two spectral parameters (p, A) are pinned by a
// nested root find on the matching defects.

struct ShootOptions {
  double xi_max_factor = 1.0;  // stretches the far matching point
  double step_scale = 1.0;     // < 1 forces shorter Taylor steps
  int series_terms = 30;
};

// Piecewise-polynomial dense solution from the Taylor integration.
class TaylorSolution {
public:
  struct Piece {
    double center;
    double begin, end;  // covered interval, begin <= end
    std::vector<double> coeff;
  };

  void add_piece(Piece piece) { pieces_.push_back(std::move(piece)); }
  const std::vector<Piece>& pieces() const { return pieces_; }
  bool covers(double t) const;
  double value(double t) const;
  double derivative(double t) const;
  double begin() const;
  double end() const;
  std::size_t piece_count() const { return pieces_.size(); }

private:
  const Piece& locate(double t) const;
  std::vector<Piece> pieces_;
};

// Defect of the parity condition at eta = 0 after integrating inward from
// the regular series start at eta = 1.  Signed and scale-normalized, so
// bracketing in A works on its sign changes.
double eta_mismatch(double p, double A, const StateLabel& state, const ShootOptions& = {});

// Log-derivative defect at the interior matching point between the outward
// series solution from xi = 1 and the inward integration seeded by the
// large-distance tail at xi_max(p).
double xi_mismatch(double p, double A, double R, const ShootOptions& = {});

struct ShootResult {
  StateLabel state;
  double R = 0.0;
  double p = 0.0;
  double A = 0.0;
  double e_total = 0.0;      // [Ry], from the p-energy relation
  double residual_xi = 0.0;
  double residual_eta = 0.0;
  double xi_max = 0.0;

  TaylorSolution xi_solution;   // [1, xi_max], normalized X(1) = 1
  TaylorSolution eta_solution;  // [0, 1], normalized Y(1) = 1

  // report grids
  std::vector<double> report_xi, report_X;
  std::vector<double> report_eta, report_Y;

  double X_at(double xi) const;             // includes the tail beyond xi_max
  double X_log_derivative_at(double xi) const;
  double Y_at(double eta) const;            // parity continues eta < 0
};

// Nested root find: A from the parity defect at fixed p, then p from the
// matching defect.  Seeds come from the variational stage; brackets expand
// from them and failure to bracket reports the scanned window.
ShootResult solve_exact(const Geometry& geometry, const StateLabel& state, double p_seed,
                        double A_seed, const ShootOptions& = {});

// Largest relative pointwise deviation of an approximate wavefunction from
// the oracle over a stratified (xi, eta) sample of the region where the
// oracle is above 1e-6 of its peak.  Both functions are L2-normalized with
// the full volume weight and sign-aligned at a reference point; a small
// strip around the symmetry node is excluded for odd states.
double pointwise_delta(const std::function<double(double, double)>& psi_app,
                       const ShootResult& oracle);

}  // namespace h2p
