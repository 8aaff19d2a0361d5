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

#include "prolate.hpp"

#include <cmath>

#include "errors.hpp"

namespace h2p {

std::optional<StateLabel> StateLabel::parse(std::string_view name) {
  if (name == "1ssg") return sigma_g();
  if (name == "2psu") return sigma_u();
  return std::nullopt;
}

std::string StateLabel::name() const {
  if (*this == sigma_g()) return "1ssg";
  if (*this == sigma_u()) return "2psu";
  return "(" + std::to_string(n) + "," + std::to_string(m) + "," +
         std::to_string(lambda) + (parity == Parity::gerade ? ",+)" : ",-)");
}

bool StateLabel::solver_supported() const {
  return *this == sigma_g() || *this == sigma_u();
}

void Geometry::validate() const {
  if (!(R > 0.0)) throw domain_error("internuclear distance must be positive");
  if (R > kMaxR)
    throw domain_error("internuclear distance exceeds the validated range (0, 50]");
}

ProlatePoint to_prolate(double r1, double r2, double R) {
  if (!(R > 0.0)) throw domain_error("to_prolate: R must be positive");
  if (r1 < 0.0 || r2 < 0.0) throw domain_error("to_prolate: distances must be nonnegative");
  const double slack = 1e-12 * (r1 + r2 + R);
  if (std::abs(r1 - r2) > R + slack || r1 + r2 < R - slack)
    throw domain_error("to_prolate: (r1, r2, R) violate the triangle inequality");
  ProlatePoint point;
  point.xi = (r1 + r2) / R;
  point.eta = (r2 - r1) / R;
  if (point.xi < 1.0) point.xi = 1.0;
  if (point.eta > 1.0) point.eta = 1.0;
  if (point.eta < -1.0) point.eta = -1.0;
  return point;
}

std::array<double, 2> from_prolate(const ProlatePoint& point, double R) {
  if (!(R > 0.0)) throw domain_error("from_prolate: R must be positive");
  if (point.xi < 1.0 || std::abs(point.eta) > 1.0)
    throw domain_error("from_prolate: point outside the coordinate domain");
  return {R * (point.xi - point.eta) / 2.0, R * (point.xi + point.eta) / 2.0};
}

double electronic_energy_from_p(double p, double R) {
  if (!(R > 0.0)) throw domain_error("R must be positive");
  return -4.0 * p * p / (R * R);
}

double p_from_electronic_energy(double e_prime, double R) {
  if (!(R > 0.0)) throw domain_error("R must be positive");
  if (e_prime >= 0.0) throw domain_error("bound state requires negative electronic energy");
  return 0.5 * R * std::sqrt(-e_prime);
}

PhaseSeries wkb_tail_xi(const SpectralPair& pair, double R, int lambda) {
  if (!(pair.p > 0.0)) throw singular_error("wkb_tail_xi: requires p > 0");
  const double p = pair.p;
  const double A = pair.A;
  const double rho = R / p;  // R/p appears in both subleading coefficients
  PhaseSeries s{PhaseSeries::Regime::xi_large, {}, 3};
  s.c[0] = p;
  s.c[1] = -(rho - lambda - 1.0);
  s.c[2] = 0.5 * ((A + (rho - lambda - 1.0) * (rho + lambda)) / p - p);
  return s;
}

PhaseSeries taylor_phase_xi(const SpectralPair& pair, double R, int lambda) {
  const double p = pair.p;
  const double A = pair.A;
  PhaseSeries s{PhaseSeries::Regime::xi_small, {}, 3};
  s.c[0] = -A / 2.0;
  s.c[1] = -R / 3.0;
  s.c[2] = (p * p + A * A - A * (2.0 * lambda + 3.0)) / 12.0;
  return s;
}

PhaseSeries wkb_tail_eta(const SpectralPair& pair, int lambda) {
  if (!(pair.p > 0.0)) throw singular_error("wkb_tail_eta: requires p > 0");
  const double p = pair.p;
  const double A = pair.A;
  PhaseSeries s{PhaseSeries::Regime::eta_large, {}, 3};
  s.c[0] = -p;
  s.c[1] = lambda + 1.0;
  s.c[2] = -0.5 * ((A - lambda * (lambda + 1.0)) / p - p);
  return s;
}

PhaseSeries taylor_phase_eta(const SpectralPair& pair, int lambda) {
  const double p = pair.p;
  const double A = pair.A;
  PhaseSeries s{PhaseSeries::Regime::eta_small, {}, 2};
  s.c[0] = -A / 2.0;
  s.c[1] = (p * p + A * A - A * (2.0 * lambda + 3.0)) / 12.0;
  s.c[2] = 0.0;
  return s;
}

}  // namespace h2p
