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

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace h2p {

enum class Parity { gerade, ungerade };

// Quantum numbers identifying an electronic state: node counts in the two
// separated coordinates, the magnetic quantum number, and the symmetry under
// exchange of the two centers.  The solvers accept exactly the two lowest
// sigma states, 1ssg (0,0,0,+) and 2psu (0,0,0,-); every other label is
// representable but rejected.
struct StateLabel {
  int n = 0;       // xi-node count
  int m = 0;       // eta^2-node count
  int lambda = 0;  // magnetic quantum number
  Parity parity = Parity::gerade;

  static StateLabel sigma_g() { return {0, 0, 0, Parity::gerade}; }
  static StateLabel sigma_u() { return {0, 0, 0, Parity::ungerade}; }

  // Parses the ASCII spectroscopic names "1ssg" and "2psu".
  static std::optional<StateLabel> parse(std::string_view name);

  std::string name() const;
  bool solver_supported() const;
  bool operator==(const StateLabel&) const = default;
};

// Two unit-charge centers a distance R apart, lengths in Bohr.
struct Geometry {
  double R = 2.0;
  static constexpr double kMaxR = 50.0;  // validated range of the method
  void validate() const;                 // throws domain_error
};

// Point in prolate spheroidal coordinates: xi >= 1, |eta| <= 1.
struct ProlatePoint {
  double xi = 1.0;
  double eta = 0.0;
  double phi = 0.0;
};

// (r1, r2, R) -> (xi, eta); requires the triangle inequality
// |r1 - r2| <= R <= r1 + r2.
ProlatePoint to_prolate(double r1, double r2, double R);

// Inverse map; returns (r1, r2).
std::array<double, 2> from_prolate(const ProlatePoint& point, double R);

// Momentum-like spectral parameter p > 0 and separation constant A.  For a
// bound state p^2 = -E' R^2 / 4 with the electronic energy E' in Rydberg.
struct SpectralPair {
  double p = 1.0;
  double A = 0.0;
};

double electronic_energy_from_p(double p, double R);  // E' [Ry]
double p_from_electronic_energy(double e_prime, double R);

// One truncated expansion of the phase F = -log(wavefunction) in a single
// asymptotic regime.  Coefficients are stored with the signs the phase
// carries when written out term by term:
//   xi_large : F =  c0*xi + c1*log(xi) + c2/xi
//   xi_small : F =  c0*xi^2 + c1*xi^3 + c2*xi^4
//   eta_large: F =  c0*eta + c1*log(eta) + c2/eta
//   eta_small: F =  c0*eta^2 + c1*eta^4
struct PhaseSeries {
  enum class Regime { xi_large, xi_small, eta_large, eta_small };
  Regime regime;
  std::array<double, 3> c{};
  int terms = 3;
};

// Large-distance (WKB) tail of the xi phase; the linear coefficient is p and
// together with the log coefficient is independent of A.
PhaseSeries wkb_tail_xi(const SpectralPair& pair, double R, int lambda);

// Small-argument expansion of the xi phase, used purely as the interpolation
// anchor of the trial construction.
PhaseSeries taylor_phase_xi(const SpectralPair& pair, double R, int lambda);

// Large-argument continuation of the eta phase; the linear coefficient is -p,
// so the continued solution grows like e^{+p eta}.
PhaseSeries wkb_tail_eta(const SpectralPair& pair, int lambda);

// Small-argument expansion of the eta phase (no cubic term).
PhaseSeries taylor_phase_eta(const SpectralPair& pair, int lambda);

}  // namespace h2p
