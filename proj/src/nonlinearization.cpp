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

#include "nonlinearization.hpp"

#include <algorithm>
#include <cmath>

#include "optimize.hpp"

namespace h2p {
namespace {

double tau(Parity parity, double u) {
  return parity == Parity::gerade ? std::tanh(u) : 1.0 / std::tanh(u);
}

// Stable eta perturbation.  Writing y0 = q - u' tau(u) and expanding
// y0' - y0^2 cancels the tau^2 term exactly, leaving a single transcendental
// whose node singularity is killed by the vanishing bracket B.
double eta_perturbation(const TrialParams& params, double eta_signed) {
  const double eta = std::abs(eta_signed);  // even function
  const double p = params.p;
  if (eta < 1e-12) {
    const double a1 = params.a1;
    if (params.state.parity == Parity::gerade) return a1 * a1 - 0.5 * params.b2;
    const double u3 = p * params.a2 - a1 * params.b2;
    return a1 * a1 - 1.5 * params.b2 - 2.0 + 6.0 * u3 / a1;
  }
  const EtaPhaseParts ph = eta_phase_parts(params, eta);
  const double core = ph.q1 - ph.q * ph.q - ph.u1 * ph.u1;
  const double bracket = (eta * eta - 1.0) * (ph.u2 - 2.0 * ph.q * ph.u1) + 2.0 * eta * ph.u1;
  return p * p * eta * eta + (eta * eta - 1.0) * core + 2.0 * eta * ph.q -
         bracket * tau(params.state.parity, ph.u);
}

double xi_perturbation(const TrialParams& params, double xi) {
  const XiParts parts = eval_xi_parts(params, xi);
  const double p = params.p;
  return p * p * xi * xi - 2.0 * params.R * xi +
         (xi * xi - 1.0) * (parts.x0_prime - parts.x0 * parts.x0) + 2.0 * xi * parts.x0;
}

}  // namespace

RiccatiData::RiccatiData(const TrialParams& params, Coordinate coordinate)
    : coordinate_(coordinate), params_(params) {
  params_.validate();
}

double RiccatiData::x0(double t) const {
  return coordinate_ == Coordinate::xi ? log_derivative_X0(params_, t)
                                       : log_derivative_Y0(params_, t);
}

double RiccatiData::x0_prime(double t) const {
  if (coordinate_ == Coordinate::xi) return eval_xi_parts(params_, t).x0_prime;
  // y0' from the phase parts; has the same node restriction as y0 itself.
  const double y0 = log_derivative_Y0(params_, t);
  const EtaPhaseParts ph = eta_phase_parts(params_, t);
  const double defect = (ph.q1 - ph.q * ph.q - ph.u1 * ph.u1) -
                        (ph.u2 - 2.0 * ph.q * ph.u1) * tau(params_.state.parity, ph.u);
  return defect + y0 * y0;
}

double RiccatiData::V(double t) const {
  const double p = params_.p;
  if (coordinate_ == Coordinate::xi) return p * p * t * t - 2.0 * params_.R * t;
  return p * p * t * t;
}

double RiccatiData::V1(double t) const {
  return coordinate_ == Coordinate::xi ? xi_perturbation(params_, t)
                                       : eta_perturbation(params_, t);
}

double RiccatiData::V0(double t) const { return V(t) - V1(t); }

double RiccatiData::weight(double t) const {
  if (coordinate_ == Coordinate::xi) {
    const double x = eval_X0(params_, t);
    return x * x;
  }
  const double y = eval_Y0(params_, t);
  return y * y;
}

RiccatiData build_riccati(const TrialParams& params, const Geometry& geometry,
                          Coordinate coordinate) {
  geometry.validate();
  if (params.R != geometry.R) throw usage_error("build_riccati: R mismatch");
  return RiccatiData(params, coordinate);
}

double first_separation_constant(const RiccatiData& riccati, int order) {
  const TrialParams& params = riccati.params();
  if (riccati.coordinate() == Coordinate::xi) {
    const QuadratureRule rule = semi_infinite_rule(order, 1.0 / std::clamp(params.p, 1e-3, 1e3));
    const auto numerator = integrate(
        [&](double xi) { return riccati.V1(xi) * riccati.weight(xi); }, rule);
    const auto denominator = integrate([&](double xi) { return riccati.weight(xi); }, rule);
    if (!(denominator.value > 0.0))
      throw singular_error("first_separation_constant: weight norm underflow");
    return numerator.value / denominator.value;
  }
  const QuadratureRule rule = gauss_rule(order);
  const auto numerator =
      integrate([&](double eta) { return riccati.V1(eta) * riccati.weight(eta); }, rule);
  const auto denominator = integrate([&](double eta) { return riccati.weight(eta); }, rule);
  if (!(denominator.value > 0.0))
    throw singular_error("first_separation_constant: weight norm underflow");
  return numerator.value / denominator.value;
}

namespace {

// Composite 7-point Gauss segments shared by the cumulative sweeps.
struct Segment {
  std::array<double, 7> nodes;
  std::array<double, 7> weights;
};

Segment make_segment(double a, double b) {
  static const QuadratureRule base = gauss_rule(7);
  Segment segment;
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int j = 0; j < 7; ++j) {
    segment.nodes[j] = mid + half * base.nodes[j];
    segment.weights[j] = half * base.weights[j];
  }
  return segment;
}

template <class F>
double segment_integral(const F& f, double a, double b) {
  const Segment segment = make_segment(a, b);
  double sum = 0.0;
  for (int j = 0; j < 7; ++j) sum += segment.weights[j] * f(segment.nodes[j]);
  return sum;
}

// Integral of f over [a, infinity) through the rational map, 48 nodes.
template <class F>
double tail_integral(const F& f, double a, double scale) {
  static const QuadratureRule base = gauss_rule(48);
  double sum = 0.0;
  for (int j = 0; j < 48; ++j) {
    const double t = 0.5 * (base.nodes[j] + 1.0);
    const double omt = 1.0 - t;
    sum += 0.5 * base.weights[j] * scale / (omt * omt) * f(a + scale * t / omt);
  }
  return sum;
}

CorrectionProfile xi_correction(const RiccatiData& riccati, double a1, int order) {
  const TrialParams& params = riccati.params();
  const double p = params.p;
  const int intervals = std::max(360, 2 * order);
  const double xi_far = 1.0 + 36.0 / std::clamp(p, 1e-3, 1e3);
  const double w_far = std::log1p(p * (xi_far - 1.0));

  std::vector<double> grid(intervals + 1);
  for (int i = 0; i <= intervals; ++i)
    grid[i] = 1.0 + std::expm1(w_far * i / intervals) / p;
  grid.front() = 1.0;
  grid.back() = xi_far;

  const auto h = [&](double xi) { return (a1 - riccati.V1(xi)) * riccati.weight(xi); };
  const auto denom = [&](double xi) {
    return (xi * xi - 1.0) * riccati.weight(xi);
  };

  // Forward cumulative of h at every refined node, plus the denominator, to
  // locate where the forward form loses significance against the tail form.
  struct Refined {
    double node, c_forward, denominator;
  };
  std::vector<std::vector<Refined>> refined(intervals);
  std::vector<double> c_grid(intervals + 1, 0.0);
  double c_max = 0.0, denom_max = 0.0;
  for (int i = 0; i < intervals; ++i) {
    const Segment segment = make_segment(grid[i], grid[i + 1]);
    refined[i].resize(7);
    for (int j = 0; j < 7; ++j) {
      const double node = segment.nodes[j];
      refined[i][j].node = node;
      refined[i][j].c_forward = c_grid[i] + segment_integral(h, grid[i], node);
      refined[i][j].denominator = denom(node);
      denom_max = std::max(denom_max, refined[i][j].denominator);
      c_max = std::max(c_max, std::abs(refined[i][j].c_forward));
    }
    c_grid[i + 1] = c_grid[i] + segment_integral(h, grid[i], grid[i + 1]);
    c_max = std::max(c_max, std::abs(c_grid[i + 1]));
  }

  // Past the peak of the denominator the forward cumulative is a difference
  // of two nearly equal numbers; switch to the tail form there.
  const double cross = 1e-4 * denom_max;
  int peak_interval = 0;
  {
    double best = 0.0;
    for (int i = 0; i < intervals; ++i)
      for (const Refined& r : refined[i])
        if (r.denominator > best) {
          best = r.denominator;
          peak_interval = i;
        }
  }
  const double tail_scale = 0.5 / std::clamp(p, 1e-3, 1e3);
  const auto x1_at = [&](double node, double c_forward, double denominator, int interval) {
    if (node <= 1.0) return 0.5 * (a1 - riccati.V1(1.0));
    if (interval > peak_interval && denominator < cross)
      return -tail_integral(h, node, tail_scale) / denominator;
    return c_forward / denominator;
  };

  CorrectionProfile profile;
  profile.coordinate = Coordinate::xi;
  profile.a1_used = a1;
  profile.nodes = grid;
  profile.correction.resize(intervals + 1);
  profile.phase.resize(intervals + 1);
  profile.correction[0] = 0.5 * (a1 - riccati.V1(1.0));
  profile.phase[0] = 0.0;
  for (int i = 0; i < intervals; ++i) {
    double phase_step = 0.0;
    const Segment segment = make_segment(grid[i], grid[i + 1]);
    for (int j = 0; j < 7; ++j) {
      const Refined& r = refined[i][j];
      phase_step += segment.weights[j] * x1_at(r.node, r.c_forward, r.denominator, i);
    }
    profile.phase[i + 1] = profile.phase[i] + phase_step;
    profile.correction[i + 1] =
        x1_at(grid[i + 1], c_grid[i + 1], denom(grid[i + 1]), i);
  }

  // Limit of the phase: what remains of the correction beyond the stored
  // grid.  Once the weight underflows, the ratio of tail integral to
  // denominator has the closed asymptotic form (a1 - V1)/(2 x0 (xi^2-1)).
  const auto x1_tail = [&](double xi) {
    const double d = denom(xi);
    if (d > 1e-250) return -tail_integral(h, xi, tail_scale) / d;
    const double x0 = eval_xi_parts(params, xi).x0;
    return -(a1 - riccati.V1(xi)) / (2.0 * x0 * (xi * xi - 1.0));
  };
  profile.phase_infinity = profile.phase.back() + tail_integral(x1_tail, xi_far, xi_far);
  profile.forward_tail_residual = std::abs(c_grid.back()) / std::max(c_max, 1e-300);
  return profile;
}

CorrectionProfile eta_correction(const RiccatiData& riccati, double a1, int order) {
  const int intervals = std::max(360, 2 * order);

  std::vector<double> half_grid(intervals + 1);
  for (int i = 0; i <= intervals; ++i) half_grid[i] = static_cast<double>(i) / intervals;

  const auto g = [&](double eta) { return (a1 - riccati.V1(eta)) * riccati.weight(eta); };
  const auto denom = [&](double eta) { return (eta * eta - 1.0) * riccati.weight(eta); };

  // Cumulative from the regular endpoint eta = 1 downward; by parity and the
  // definition of a1 this equals the cumulative from -1 without the
  // cancellation of the two half-integrals.
  std::vector<std::array<double, 7>> n_refined(intervals);
  std::vector<double> n_grid(intervals + 1, 0.0);
  for (int i = intervals - 1; i >= 0; --i) {
    const Segment segment = make_segment(half_grid[i], half_grid[i + 1]);
    for (int j = 0; j < 7; ++j)
      n_refined[i][j] =
          n_grid[i + 1] - segment_integral(g, segment.nodes[j], half_grid[i + 1]);
    n_grid[i] = n_grid[i + 1] - segment_integral(g, half_grid[i], half_grid[i + 1]);
  }

  const auto y1_at = [&](double eta, double n_value) {
    if (eta <= 0.0) return 0.0;  // odd in eta for both parities
    if (eta >= 1.0) return 0.5 * (a1 - riccati.V1(1.0));
    return n_value / denom(eta);
  };

  std::vector<double> y1_half(intervals + 1), rho1_half(intervals + 1);
  for (int i = 0; i <= intervals; ++i) y1_half[i] = y1_at(half_grid[i], n_grid[i]);
  rho1_half[0] = 0.0;
  for (int i = 0; i < intervals; ++i) {
    const Segment segment = make_segment(half_grid[i], half_grid[i + 1]);
    double step = 0.0;
    for (int j = 0; j < 7; ++j)
      step += segment.weights[j] * y1_at(segment.nodes[j], n_refined[i][j]);
    rho1_half[i + 1] = rho1_half[i] + step;
  }

  // Mirror onto [-1, 1]; the correction is odd, its phase even.
  CorrectionProfile profile;
  profile.coordinate = Coordinate::eta;
  profile.a1_used = a1;
  profile.nodes.resize(2 * intervals + 1);
  profile.correction.resize(2 * intervals + 1);
  profile.phase.resize(2 * intervals + 1);
  for (int i = 0; i <= intervals; ++i) {
    profile.nodes[intervals + i] = half_grid[i];
    profile.correction[intervals + i] = y1_half[i];
    profile.phase[intervals + i] = rho1_half[i];
    profile.nodes[intervals - i] = -half_grid[i];
    profile.correction[intervals - i] = -y1_half[i];
    profile.phase[intervals - i] = rho1_half[i];
  }
  profile.forward_tail_residual =
      std::abs(n_grid.front()) /
      std::max(*std::max_element(n_grid.begin(), n_grid.end(),
                                 [](double a, double b) { return std::abs(a) < std::abs(b); }),
               1e-300);
  return profile;
}

}  // namespace

CorrectionProfile first_correction(const RiccatiData& riccati, double a1, int order) {
  return riccati.coordinate() == Coordinate::xi ? xi_correction(riccati, a1, order)
                                                : eta_correction(riccati, a1, order);
}

double consistency_gap(const SolveResult& result) {
  if (!std::isfinite(result.a1x) || !std::isfinite(result.a1y))
    throw usage_error("consistency_gap: separation constants not attached");
  return std::abs(result.a1x - result.a1y);
}

void attach_separation_constants(SolveResult& result, int order) {
  const Geometry geometry{result.R};
  const RiccatiData xi_data = build_riccati(result.params, geometry, Coordinate::xi);
  const RiccatiData eta_data = build_riccati(result.params, geometry, Coordinate::eta);
  result.a1x = first_separation_constant(xi_data, order);
  result.a1y = first_separation_constant(eta_data, order);
}

CorrectedWavefunction::CorrectedWavefunction(const TrialParams& params,
                                             CorrectionProfile xi_profile,
                                             CorrectionProfile eta_profile)
    : params_(params), xi_profile_(std::move(xi_profile)), eta_profile_(std::move(eta_profile)) {
  if (xi_profile_.coordinate != Coordinate::xi || eta_profile_.coordinate != Coordinate::eta)
    throw usage_error("CorrectedWavefunction: profiles for both coordinates required");
  phi1_ = MonotoneCubic(xi_profile_.nodes, xi_profile_.phase);
  x1_ = MonotoneCubic(xi_profile_.nodes, xi_profile_.correction);
  // store the nonnegative half; parity supplies the rest exactly
  const std::size_t half = eta_profile_.nodes.size() / 2;
  std::vector<double> eta_nodes(eta_profile_.nodes.begin() + half, eta_profile_.nodes.end());
  std::vector<double> rho(eta_profile_.phase.begin() + half, eta_profile_.phase.end());
  std::vector<double> y1(eta_profile_.correction.begin() + half, eta_profile_.correction.end());
  rho1_ = MonotoneCubic(eta_nodes, rho);
  y1_ = MonotoneCubic(std::move(eta_nodes), std::move(y1));
}

double CorrectedWavefunction::phi1_clamped(double xi) const {
  return xi > phi1_.back() ? xi_profile_.phase_infinity : phi1_(xi);
}

double CorrectedWavefunction::x1_clamped(double xi) const {
  return xi > x1_.back() ? 0.0 : x1_(xi);
}

double CorrectedWavefunction::rho1_abs(double eta_abs) const { return rho1_(eta_abs); }

double CorrectedWavefunction::y1_signed(double eta) const {
  const double magnitude = y1_(std::abs(eta));
  return eta < 0.0 ? -magnitude : magnitude;
}

double CorrectedWavefunction::X(double xi) const {
  if (!phi1_.covers(xi))
    throw domain_error("CorrectedWavefunction: point outside the stored profile grid");
  return eval_X0(params_, xi) * std::exp(-phi1_(xi));
}

double CorrectedWavefunction::Y(double eta) const {
  if (std::abs(eta) > 1.0)
    throw domain_error("CorrectedWavefunction: |eta| must not exceed 1");
  return eval_Y0(params_, eta) * std::exp(-rho1_abs(std::abs(eta)));
}

double CorrectedWavefunction::evaluate(const ProlatePoint& point) const {
  return X(point.xi) * Y(point.eta);
}

double CorrectedWavefunction::X_clamped(double xi) const {
  return eval_X0(params_, xi) * std::exp(-phi1_clamped(xi));
}

double CorrectedWavefunction::X_derivative_clamped(double xi) const {
  const XiParts parts = eval_xi_parts(params_, xi);
  return -(parts.x0 + x1_clamped(xi)) * parts.value * std::exp(-phi1_clamped(xi));
}

double CorrectedWavefunction::Y_clamped(double eta) const {
  return eval_Y0(params_, eta) * std::exp(-rho1_abs(std::min(std::abs(eta), 1.0)));
}

double CorrectedWavefunction::Y_derivative_clamped(double eta) const {
  const EtaParts parts = eval_eta_parts(params_, eta);
  const double damp = std::exp(-rho1_abs(std::min(std::abs(eta), 1.0)));
  return damp * (parts.derivative - parts.value * y1_signed(eta));
}

CorrectedWavefunction corrected_trial(const TrialParams& params,
                                      const CorrectionProfile& xi_profile,
                                      const CorrectionProfile& eta_profile) {
  return CorrectedWavefunction(params, xi_profile, eta_profile);
}

CorrectedWavefunction build_corrected(const SolveResult& result, int order) {
  const Geometry geometry{result.R};
  const RiccatiData xi_data = build_riccati(result.params, geometry, Coordinate::xi);
  const RiccatiData eta_data = build_riccati(result.params, geometry, Coordinate::eta);
  const double a1x = std::isfinite(result.a1x) ? result.a1x
                                               : first_separation_constant(xi_data, order);
  const double a1y = std::isfinite(result.a1y) ? result.a1y
                                               : first_separation_constant(eta_data, order);
  return CorrectedWavefunction(result.params, first_correction(xi_data, a1x, order),
                               first_correction(eta_data, a1y, order));
}

double corrected_energy(const CorrectedWavefunction& wavefunction, const Geometry& geometry,
                        int order) {
  geometry.validate();
  const TrialParams& params = wavefunction.params();
  if (params.R != geometry.R) throw usage_error("corrected_energy: R mismatch");
  const double R = geometry.R;

  const auto moments = [&](int n) {
    const QuadratureRule xi_rule = semi_infinite_rule(n, 1.0 / std::clamp(params.p, 1e-3, 1e3));
    const QuadratureRule eta_rule = gauss_rule(n);
    long double nx = 0, sx = 0, mx = 0, kx = 0;
    for (std::size_t i = 0; i < xi_rule.nodes.size(); ++i) {
      const double xi = xi_rule.nodes[i];
      const double w = xi_rule.weights[i];
      const double value = wavefunction.X_clamped(xi);
      const double derivative = wavefunction.X_derivative_clamped(xi);
      const double v2 = value * value;
      nx += static_cast<long double>(w) * v2;
      mx += static_cast<long double>(w) * xi * v2;
      sx += static_cast<long double>(w) * xi * xi * v2;
      kx += static_cast<long double>(w) * (xi * xi - 1.0) * derivative * derivative;
    }
    long double ne = 0, se = 0, ke = 0;
    for (std::size_t i = 0; i < eta_rule.nodes.size(); ++i) {
      const double eta = eta_rule.nodes[i];
      const double w = eta_rule.weights[i];
      const double value = wavefunction.Y_clamped(eta);
      const double derivative = wavefunction.Y_derivative_clamped(eta);
      const double v2 = value * value;
      ne += static_cast<long double>(w) * v2;
      se += static_cast<long double>(w) * eta * eta * v2;
      ke += static_cast<long double>(w) * (1.0 - eta * eta) * derivative * derivative;
    }
    struct Sums {
      double nx, sx, mx, kx, ne, se, ke;
    };
    return Sums{static_cast<double>(nx), static_cast<double>(sx), static_cast<double>(mx),
                static_cast<double>(kx), static_cast<double>(ne), static_cast<double>(se),
                static_cast<double>(ke)};
  };

  const auto fine = moments(2 * order);
  const double norm = fine.sx * fine.ne - fine.nx * fine.se;
  if (!(norm > 0.0)) throw domain_error("corrected_energy: non-positive norm");
  const double kinetic = 4.0 / (R * R) * (fine.kx * fine.ne + fine.nx * fine.ke);
  const double coulomb = -8.0 / R * fine.mx * fine.ne;
  return (kinetic + coulomb) / norm;
}

namespace {

// Least-squares cubic about x0; cubic capture matters because the vertex of
// a plain parabola fit is biased by the energy's third derivative.
struct CubicFit {
  double c0, c1, c2, c3;

  double stationary_offset() const {
    if (std::abs(c3) < 1e-300) return -0.5 * c1 / c2;
    const double disc = 4.0 * c2 * c2 - 12.0 * c3 * c1;
    if (!(disc >= 0.0)) return -0.5 * c1 / c2;
    const double root = std::sqrt(disc);
    const double r1 = (-2.0 * c2 + root) / (6.0 * c3);
    const double r2 = (-2.0 * c2 - root) / (6.0 * c3);
    return std::abs(r1) < std::abs(r2) ? r1 : r2;
  }
  double at(double d) const { return c0 + d * (c1 + d * (c2 + d * c3)); }
};

CubicFit fit_cubic(const std::vector<double>& xs, const std::vector<double>& fs, double x0) {
  double a[16] = {0};
  double b[4] = {0};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = xs[i] - x0;
    double powers[7] = {1, d, d * d, 0, 0, 0, 0};
    for (int k = 3; k <= 6; ++k) powers[k] = powers[k - 1] * d;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) a[r * 4 + c] += powers[r + c];
      b[r] += fs[i] * powers[r];
    }
  }
  // Gaussian elimination with partial pivoting on the 4x4 normal equations.
  int perm[4] = {0, 1, 2, 3};
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a[perm[r] * 4 + col]) > std::abs(a[perm[pivot] * 4 + col])) pivot = r;
    std::swap(perm[col], perm[pivot]);
    const double diag = a[perm[col] * 4 + col];
    if (std::abs(diag) < 1e-300) throw singular_error("fit_cubic: degenerate samples");
    for (int r = col + 1; r < 4; ++r) {
      const double factor = a[perm[r] * 4 + col] / diag;
      for (int c = col; c < 4; ++c) a[perm[r] * 4 + c] -= factor * a[perm[col] * 4 + c];
      b[perm[r]] -= factor * b[perm[col]];
    }
  }
  double solution[4];
  for (int col = 3; col >= 0; --col) {
    double sum = b[perm[col]];
    for (int c = col + 1; c < 4; ++c) sum -= a[perm[col] * 4 + c] * solution[c];
    solution[col] = sum / a[perm[col] * 4 + col];
  }
  return {solution[0], solution[1], solution[2], solution[3]};
}

}  // namespace

PReoptimizeResult reoptimize_p(const SolveResult& result, int order) {
  const Geometry geometry{result.R};
  const double p0 = result.params.p;
  const double step = 4e-4 * p0;

  std::vector<double> ps, plain, dressed;
  for (int k = -4; k <= 4; ++k) {
    const double p = p0 + k * step;
    TrialParams params = result.params;
    params.p = p;
    plain.push_back(energy_expectation(params, geometry, order).e_prime);

    const RiccatiData xi_data(params, Coordinate::xi);
    const RiccatiData eta_data(params, Coordinate::eta);
    const double a1x = first_separation_constant(xi_data, order);
    const double a1y = first_separation_constant(eta_data, order);
    const CorrectedWavefunction corrected(params, first_correction(xi_data, a1x, order),
                                          first_correction(eta_data, a1y, order));
    dressed.push_back(corrected_energy(corrected, geometry, order));
    ps.push_back(p);
  }

  const CubicFit plain_fit = fit_cubic(ps, plain, p0);
  const CubicFit dressed_fit = fit_cubic(ps, dressed, p0);
  const double d_plain = plain_fit.stationary_offset();
  const double d_dressed = dressed_fit.stationary_offset();

  PReoptimizeResult out;
  out.p_uncorrected = p0 + d_plain;
  out.p_corrected = p0 + d_dressed;
  // change of the reported optimum when re-minimized with corrections on
  out.relative_shift = std::abs(d_dressed) / p0;
  out.e_uncorrected = plain_fit.at(d_plain);
  out.e_corrected = dressed_fit.at(d_dressed);
  out.energy_shift = std::abs(out.e_corrected - out.e_uncorrected);
  return out;
}

}  // namespace h2p
