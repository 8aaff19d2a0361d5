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

#include "shooting.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "quadrature.hpp"

namespace h2p {

bool TaylorSolution::covers(double t) const {
  return !pieces_.empty() && t >= begin() - 1e-12 && t <= end() + 1e-12;
}

double TaylorSolution::begin() const {
  double lowest = pieces_.front().begin;
  for (const Piece& piece : pieces_) lowest = std::min(lowest, piece.begin);
  return lowest;
}

double TaylorSolution::end() const {
  double highest = pieces_.front().end;
  for (const Piece& piece : pieces_) highest = std::max(highest, piece.end);
  return highest;
}

const TaylorSolution::Piece& TaylorSolution::locate(double t) const {
  if (pieces_.empty()) throw domain_error("TaylorSolution: empty");
  for (const Piece& piece : pieces_)
    if (t >= piece.begin - 1e-12 && t <= piece.end + 1e-12) return piece;
  throw domain_error("TaylorSolution: point outside the covered range");
}

double TaylorSolution::value(double t) const {
  const Piece& piece = locate(t);
  const double tau = t - piece.center;
  double sum = 0.0;
  for (std::size_t k = piece.coeff.size(); k-- > 0;) sum = sum * tau + piece.coeff[k];
  return sum;
}

double TaylorSolution::derivative(double t) const {
  const Piece& piece = locate(t);
  const double tau = t - piece.center;
  double sum = 0.0;
  for (std::size_t k = piece.coeff.size(); k-- > 1;)
    sum = sum * tau + piece.coeff[k] * static_cast<double>(k);
  return sum;
}

namespace {

struct Equation {
  double p2;  // p^2
  double twoR;
  double A;
};

// Taylor coefficients of the solution about t0 from (u, u') there.
std::vector<double> taylor_coefficients(const Equation& eq, double t0, double u0, double u1,
                                        int terms) {
  std::vector<double> c(terms + 1, 0.0);
  c[0] = u0;
  c[1] = u1;
  const double a0 = t0 * t0 - 1.0;
  const double q0 = -eq.p2 * t0 * t0 + eq.twoR * t0 + eq.A;
  const double q1 = -2.0 * eq.p2 * t0 + eq.twoR;
  const double q2 = -eq.p2;
  for (int k = 0; k + 2 <= terms; ++k) {
    double rhs = 2.0 * t0 * (k + 1.0) * (k + 1.0) * c[k + 1] + (k * (k + 1.0) + q0) * c[k];
    if (k >= 1) rhs += q1 * c[k - 1];
    if (k >= 2) rhs += q2 * c[k - 2];
    c[k + 2] = -rhs / (a0 * (k + 2.0) * (k + 1.0));
  }
  return c;
}

struct StepState {
  double t, u, du;
};

// One adaptive Taylor step from state toward target (never past it).
// Returns the accepted piece.
TaylorSolution::Piece taylor_step(const Equation& eq, StepState& state, double target,
                                  const ShootOptions& options) {
  const double direction = target > state.t ? 1.0 : -1.0;
  const double to_singularity =
      std::min(std::abs(state.t - 1.0), std::abs(state.t + 1.0));
  const double rate = std::sqrt(eq.p2 + std::abs(eq.A)) + 1.0;
  double h = std::min({0.6 * std::max(to_singularity, 1e-3), 4.0 / rate,
                       std::abs(target - state.t)});
  h *= options.step_scale;
  h = std::min(h, std::abs(target - state.t));

  const int terms = std::max(10, options.series_terms);
  std::vector<double> c;
  for (int attempt = 0; attempt < 80; ++attempt) {
    c = taylor_coefficients(eq, state.t, state.u, state.du, terms);
    double largest = std::abs(c[0]);
    double hk = 1.0;
    for (int k = 1; k <= terms; ++k) {
      hk *= h;
      largest = std::max(largest, std::abs(c[k]) * hk);
    }
    const double tail = std::abs(c[terms]) * hk + std::abs(c[terms - 1]) * hk / h;
    if (tail <= 1e-16 * std::max(largest, 1e-300)) break;
    h *= 0.65;
  }

  const double tau = direction * h;
  double u = 0.0;
  for (int k = terms; k >= 0; --k) u = u * tau + c[k];
  double du = 0.0;
  for (int k = terms; k >= 1; --k) du = du * tau + c[k] * static_cast<double>(k);

  TaylorSolution::Piece piece;
  piece.center = state.t;
  piece.begin = std::min(state.t, state.t + tau);
  piece.end = std::max(state.t, state.t + tau);
  piece.coeff = c;

  state.t += tau;
  state.u = u;
  state.du = du;
  return piece;
}

// Frobenius-type series about the regular singular endpoint t = 1 for the
// solution analytic there, normalized to u(1) = 1.
std::vector<double> endpoint_series(const Equation& eq, int terms) {
  std::vector<double> c(terms + 1, 0.0);
  c[0] = 1.0;
  for (int k = 0; k + 1 <= terms; ++k) {
    double rhs = (k * (k + 1.0) + eq.A - eq.p2 + eq.twoR) * c[k];
    if (k >= 1) rhs += (eq.twoR - 2.0 * eq.p2) * c[k - 1];
    if (k >= 2) rhs += -eq.p2 * c[k - 2];
    c[k + 1] = -rhs / (2.0 * (k + 1.0) * (k + 1.0));
  }
  return c;
}

struct Shot {
  StepState state;
  TaylorSolution solution;
  double sup_u = 0.0;
  double sup_du = 0.0;

  void track(const StepState& s) {
    sup_u = std::max(sup_u, std::abs(s.u));
    sup_du = std::max(sup_du, std::abs(s.du));
  }
};

// Integrates from the t = 1 endpoint toward `target`, collecting pieces.
Shot shoot_from_one(const Equation& eq, double target, const ShootOptions& options) {
  const double p = std::sqrt(eq.p2);
  const double delta = std::min(0.08, 0.4 / std::max(1.0, p)) *
                       std::max(0.2, std::min(1.0, options.step_scale));
  const int terms = std::max(16, options.series_terms);
  const std::vector<double> series = endpoint_series(eq, terms);

  const double direction = target > 1.0 ? 1.0 : -1.0;
  const double s = direction * delta;
  double u = 0.0;
  for (int k = terms; k >= 0; --k) u = u * s + series[k];
  double du = 0.0;
  for (int k = terms; k >= 1; --k) du = du * s + series[k] * static_cast<double>(k);

  Shot shot;
  TaylorSolution::Piece endpoint_piece;
  endpoint_piece.center = 1.0;
  endpoint_piece.begin = std::min(1.0, 1.0 + s);
  endpoint_piece.end = std::max(1.0, 1.0 + s);
  endpoint_piece.coeff = series;
  shot.solution.add_piece(endpoint_piece);

  shot.state = {1.0 + s, u, du};
  shot.track(shot.state);
  int guard = 0;
  while (std::abs(shot.state.t - target) > 1e-13 && ++guard < 100000) {
    shot.solution.add_piece(taylor_step(eq, shot.state, target, options));
    shot.track(shot.state);
  }
  return shot;
}

// Defect normalized against the solution's size over the whole sweep, so the
// scale stays meaningful when the solution is exponentially small at the
// evaluation point.
double eta_mismatch_normalized(const Shot& shot, double p, Parity parity) {
  const double scale =
      std::hypot(shot.sup_u, shot.sup_du / std::max(1.0, p)) + 1e-300;
  return parity == Parity::gerade ? shot.state.du / (scale * std::max(1.0, p))
                                  : shot.state.u / scale;
}

double xi_matching_point(double p) { return 1.0 + std::max(0.25, std::min(1.0, 2.0 / p)); }

double xi_far_point(double p, const ShootOptions& options) {
  return std::max(30.0 * std::log(10.0) / p, 15.0) * options.xi_max_factor;
}

// Inward integration from the far point, seeded by the large-distance tail.
Shot shoot_inward(const Equation& eq, double p, double R, double xi_start, double target,
                  const ShootOptions& options) {
  const PhaseSeries tail = wkb_tail_xi({p, eq.A}, R, 0);
  const double x_start = tail.c[0] + tail.c[1] / xi_start - tail.c[2] / (xi_start * xi_start);
  Shot shot;
  shot.state = {xi_start, 1.0, -x_start};  // arbitrary normalization
  int guard = 0;
  while (std::abs(shot.state.t - target) > 1e-13 && ++guard < 100000)
    shot.solution.add_piece(taylor_step(eq, shot.state, target, options));
  return shot;
}

}  // namespace

double eta_mismatch(double p, double A, const StateLabel& state, const ShootOptions& options) {
  if (!(p > 0.0)) throw singular_error("eta_mismatch: requires p > 0");
  if (state.lambda != 0 || state.n != 0 || state.m != 0)
    throw usage_error("eta_mismatch: only the (0,0,0,+/-) states are supported");
  const Equation eq{p * p, 0.0, A};
  const Shot shot = shoot_from_one(eq, 0.0, options);
  return eta_mismatch_normalized(shot, p, state.parity);
}

double xi_mismatch(double p, double A, double R, const ShootOptions& options) {
  if (!(p > 0.0)) throw singular_error("xi_mismatch: requires p > 0");
  const Equation eq{p * p, 2.0 * R, A};
  const double xi_mid = xi_matching_point(p);
  const Shot outward = shoot_from_one(eq, xi_mid, options);
  const Shot inward = shoot_inward(eq, p, R, xi_far_point(p, options), xi_mid, options);
  const double out_ld = outward.state.du / outward.state.u;
  const double in_ld = inward.state.du / inward.state.u;
  return (out_ld - in_ld) / (1.0 + std::abs(out_ld) + std::abs(in_ld));
}

namespace {

struct Bracket {
  double lo, hi, f_lo, f_hi;
};

// Expands around a seed until the function changes sign.
template <class F>
Bracket find_bracket(const F& f, double seed, double initial_step, double max_span,
                     const char* what) {
  double step = initial_step;
  double lo = seed, hi = seed;
  double f_seed = f(seed);
  double f_lo = f_seed, f_hi = f_seed;
  for (int iter = 0; iter < 60; ++iter) {
    lo = seed - step;
    f_lo = f(lo);
    if (f_lo * f_seed <= 0.0) return {lo, seed, f_lo, f_seed};
    hi = seed + step;
    f_hi = f(hi);
    if (f_seed * f_hi <= 0.0) return {seed, hi, f_seed, f_hi};
    if (f_lo * f_hi <= 0.0) return {lo, hi, f_lo, f_hi};
    step *= 1.7;
    if (step > max_span) break;
  }
  throw convergence_error(std::string(what) +
                          ": failed to bracket a root; scanned +/-" + std::to_string(step) +
                          " around " + std::to_string(seed));
}

// Bisection-secant hybrid on a bracketed sign change.
template <class F>
double bracketed_root(const F& f, Bracket b, double x_tol, const char* what) {
  double lo = b.lo, hi = b.hi, f_lo = b.f_lo, f_hi = b.f_hi;
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  for (int iter = 0; iter < 200; ++iter) {
    if (hi - lo < x_tol) break;
    double mid;
    // secant proposal, demoted to bisection when it leaves the bracket
    const double denom = f_hi - f_lo;
    if (std::abs(denom) > 1e-300) {
      mid = hi - f_hi * (hi - lo) / denom;
      const double margin = 0.01 * (hi - lo);
      if (!(mid > lo + margin && mid < hi - margin)) mid = 0.5 * (lo + hi);
    } else {
      mid = 0.5 * (lo + hi);
    }
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (f_lo * f_mid < 0.0) {
      hi = mid;
      f_hi = f_mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }
  (void)what;
  return 0.5 * (lo + hi);
}

}  // namespace

double ShootResult::X_at(double xi) const {
  if (xi < 1.0) throw domain_error("X_at: xi must be >= 1");
  if (xi_solution.covers(xi)) return xi_solution.value(xi);
  // continue with the tail phase beyond the integrated range
  const PhaseSeries tail = wkb_tail_xi({p, A}, R, 0);
  const auto phase = [&](double s) {
    return tail.c[0] * s - tail.c[1] * std::log(s) + tail.c[2] / s;
  };
  const double edge = xi_solution.end();
  return xi_solution.value(edge) * std::exp(-(phase(xi) - phase(edge)));
}

double ShootResult::X_log_derivative_at(double xi) const {
  if (xi_solution.covers(xi)) return -xi_solution.derivative(xi) / xi_solution.value(xi);
  const PhaseSeries tail = wkb_tail_xi({p, A}, R, 0);
  return tail.c[0] + tail.c[1] / xi - tail.c[2] / (xi * xi);
}

double ShootResult::Y_at(double eta) const {
  const double magnitude = eta_solution.value(std::abs(eta));
  if (eta >= 0.0) return magnitude;
  return state.parity == Parity::gerade ? magnitude : -magnitude;
}

ShootResult solve_exact(const Geometry& geometry, const StateLabel& state, double p_seed,
                        double A_seed, const ShootOptions& options) {
  geometry.validate();
  if (!state.solver_supported())
    throw usage_error("solve_exact: unsupported state label " + state.name());
  if (!(p_seed > 0.0)) throw domain_error("solve_exact: p seed must be positive");
  const double R = geometry.R;

  const auto A_of_p = [&](double p) {
    const auto defect = [&](double A) { return eta_mismatch(p, A, state, options); };
    const double step = std::max(0.05, 1e-3 * std::abs(A_seed));
    const Bracket bracket = find_bracket(defect, A_seed, step, 40.0 + std::abs(A_seed),
                                         "solve_exact[A]");
    return bracketed_root(defect, bracket, 2e-14 * std::max(1.0, std::abs(A_seed)),
                          "solve_exact[A]");
  };

  const auto p_defect = [&](double p) { return xi_mismatch(p, A_of_p(p), R, options); };
  const Bracket p_bracket =
      find_bracket(p_defect, p_seed, 2e-3 * p_seed, 0.35 * p_seed, "solve_exact[p]");
  const double p = bracketed_root(p_defect, p_bracket, 1e-14 * p_seed, "solve_exact[p]");
  const double A = A_of_p(p);

  ShootResult result;
  result.state = state;
  result.R = R;
  result.p = p;
  result.A = A;
  result.e_total = 2.0 / R - 4.0 * p * p / (R * R);
  result.residual_eta = std::abs(eta_mismatch(p, A, state, options));
  result.residual_xi = std::abs(xi_mismatch(p, A, R, options));
  result.xi_max = xi_far_point(p, options);

  // dense solutions for sampling: outward to the matching point, inward
  // rescaled so the two branches join continuously there
  const Equation xi_eq{p * p, 2.0 * R, A};
  const double xi_mid = xi_matching_point(p);
  Shot outward = shoot_from_one(xi_eq, xi_mid, options);
  Shot inward = shoot_inward(xi_eq, p, R, result.xi_max, xi_mid, options);
  const double join = outward.state.u / inward.state.u;
  result.xi_solution = std::move(outward.solution);
  for (TaylorSolution::Piece piece : inward.solution.pieces()) {
    for (double& coefficient : piece.coeff) coefficient *= join;
    result.xi_solution.add_piece(std::move(piece));
  }

  const Equation eta_eq{p * p, 0.0, A};
  Shot angular = shoot_from_one(eta_eq, 0.0, options);
  result.eta_solution = std::move(angular.solution);

  // report grids
  const int samples = 201;
  result.report_eta.resize(samples);
  result.report_Y.resize(samples);
  for (int i = 0; i < samples; ++i) {
    const double eta = static_cast<double>(i) / (samples - 1);
    result.report_eta[i] = eta;
    result.report_Y[i] = result.eta_solution.value(eta);
  }
  result.report_xi.resize(samples);
  result.report_X.resize(samples);
  for (int i = 0; i < samples; ++i) {
    const double xi = 1.0 + (result.xi_max - 1.0) * i / (samples - 1);
    result.report_xi[i] = xi;
    result.report_X[i] = result.X_at(xi);
  }
  return result;
}

double pointwise_delta(const std::function<double(double, double)>& psi_app,
                       const ShootResult& oracle) {
  const double p = oracle.p;
  const auto psi_oracle = [&](double xi, double eta) {
    return oracle.X_at(xi) * oracle.Y_at(eta);
  };

  // L2 norms with the (xi^2 - eta^2) volume weight, tensor quadrature
  const QuadratureRule xi_rule = semi_infinite_rule(200, 1.0 / std::clamp(p, 1e-3, 1e3));
  const QuadratureRule eta_rule = gauss_rule(200);
  const auto norm2 = [&](const std::function<double(double, double)>& psi) {
    long double total = 0.0L;
    for (std::size_t i = 0; i < xi_rule.nodes.size(); ++i) {
      const double xi = xi_rule.nodes[i];
      long double inner = 0.0L;
      for (std::size_t j = 0; j < eta_rule.nodes.size(); ++j) {
        const double eta = eta_rule.nodes[j];
        const double value = psi(xi, eta);
        inner += static_cast<long double>(eta_rule.weights[j]) * value * value *
                 (xi * xi - eta * eta);
      }
      total += static_cast<long double>(xi_rule.weights[i]) * inner;
    }
    if (!(total > 0.0L)) throw domain_error("pointwise_delta: normalization failed");
    return std::sqrt(static_cast<double>(total));
  };

  const double norm_oracle = norm2(psi_oracle);
  const double norm_app = norm2(psi_app);

  // sign alignment at a reference point away from nodes
  const double ref_xi = 1.3, ref_eta = 0.5;
  const double sign =
      (psi_oracle(ref_xi, ref_eta) / norm_oracle) * (psi_app(ref_xi, ref_eta) / norm_app) < 0.0
          ? -1.0
          : 1.0;

  // stratified sample grid
  std::vector<double> xis;
  const int n_xi = 60;
  for (int i = 0; i < n_xi; ++i) {
    const double w = static_cast<double>(i) / (n_xi - 1);
    xis.push_back(1.0 + (std::exp(3.0 * w) - 1.0) / (std::exp(3.0) - 1.0) *
                            (oracle.xi_max - 1.0));
  }
  std::vector<double> etas;
  const int n_eta = 41;
  for (int i = 0; i < n_eta; ++i) {
    const double eta = -1.0 + 2.0 * static_cast<double>(i) / (n_eta - 1);
    if (std::abs(eta) < 1e-3) continue;  // symmetry-forced node strip
    etas.push_back(eta);
  }

  double peak = 0.0;
  for (double xi : xis)
    for (double eta : etas) peak = std::max(peak, std::abs(psi_oracle(xi, eta)) / norm_oracle);

  double worst = 0.0;
  for (double xi : xis)
    for (double eta : etas) {
      const double reference = psi_oracle(xi, eta) / norm_oracle;
      if (std::abs(reference) < 1e-6 * peak) continue;
      const double approximate = sign * psi_app(xi, eta) / norm_app;
      worst = std::max(worst, std::abs(reference - approximate) / std::abs(reference));
    }
  return worst;
}

}  // namespace h2p
