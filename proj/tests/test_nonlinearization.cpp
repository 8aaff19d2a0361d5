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

#include <cmath>

#include <doctest.h>

#include "driver.hpp"

using namespace h2p;

namespace {

Context& shared_context() {
  static Context context;
  return context;
}

}  // namespace

TEST_SUITE_BEGIN("nonlinearization");

TEST_CASE("pure exponential phase generates the closed-form potential") {
  // alpha = p gamma and R = p make the xi log-derivative exactly constant p,
  // so the generated potential and the leftover perturbation have closed
  // forms: V0 = p^2 xi^2 - p^2 - 2 p xi and V1 = p^2.
  TrialParams t;
  t.p = 1.3;
  t.gamma = 0.7;
  t.alpha = t.p * t.gamma;
  t.R = t.p;
  t.a1 = 1.0;
  t.state = StateLabel::sigma_g();
  const RiccatiData data = build_riccati(t, Geometry{t.R}, Coordinate::xi);
  for (double xi : {1.0, 2.2, 7.9}) {
    CHECK(data.x0(xi) == doctest::Approx(t.p).epsilon(1e-14));
    CHECK(data.V0(xi) ==
          doctest::Approx(t.p * t.p * xi * xi - t.p * t.p - 2.0 * t.p * xi).epsilon(1e-13));
    CHECK(data.V1(xi) == doctest::Approx(t.p * t.p).epsilon(1e-13));
  }
  CHECK(data.A0() == 0.0);
}

TEST_CASE("generated potential satisfies its defining relation") {
  // L(x0) must equal A0 - V0 with A0 = 0; evaluate the left side through a
  // finite-difference x0' as an independent route.
  const SolveResult& solved = shared_context().solve(StateLabel::sigma_g(), 2.0);
  const RiccatiData data = build_riccati(solved.params, Geometry{2.0}, Coordinate::xi);
  const double h = 1e-6;
  for (double xi : {1.05, 1.8, 3.5, 9.0}) {
    const double x0 = data.x0(xi);
    const double x0_prime_fd = (data.x0(xi + h) - data.x0(xi - h)) / (2.0 * h);
    const double lhs = (xi * xi - 1.0) * (x0_prime_fd - x0 * x0) + 2.0 * xi * x0;
    CHECK(lhs == doctest::Approx(-data.V0(xi)).epsilon(1e-8));
  }
}

TEST_CASE("an exact log-derivative makes the perturbation the separation constant") {
  // Feed the shooting solution's log-derivative through the same generator:
  // the leftover must be flat at the exact A.  The second derivative comes
  // from the separated equation itself, not from differentiating samples.
  Context& ctx = shared_context();
  const ShootResult& oracle = ctx.solve_oracle(StateLabel::sigma_g(), 2.0);
  const double p = oracle.p, R = oracle.R, A = oracle.A;
  for (double xi : {1.3, 1.9, 2.6, 3.4}) {
    const double X = oracle.xi_solution.value(xi);
    const double Xp = oracle.xi_solution.derivative(xi);
    const double x0 = -Xp / X;
    const double Xpp = -(2.0 * xi * Xp + (-p * p * xi * xi + 2.0 * R * xi + A) * X) /
                       (xi * xi - 1.0);
    const double x0_prime = x0 * x0 - Xpp / X;
    const double v0 = -((xi * xi - 1.0) * (x0_prime - x0 * x0) + 2.0 * xi * x0);
    const double v1 = (p * p * xi * xi - 2.0 * R * xi) - v0;
    CHECK(v1 == doctest::Approx(A).epsilon(1e-6));
  }
}

TEST_CASE("perturbations stay bounded over the sampled domain") {
  Context& ctx = shared_context();
  for (const StateLabel& state : {StateLabel::sigma_g(), StateLabel::sigma_u()}) {
    const SolveResult& solved = ctx.solve(state, 2.0);
    const RiccatiData xi_data = build_riccati(solved.params, Geometry{2.0}, Coordinate::xi);
    double sup_v1 = 0.0;
    for (double xi = 1.0; xi <= 100.0; xi += 0.2473)
      sup_v1 = std::max(sup_v1, std::abs(xi_data.V1(xi)));
    CHECK(std::isfinite(sup_v1));
    CHECK(sup_v1 < 1e4);

    const RiccatiData eta_data = build_riccati(solved.params, Geometry{2.0}, Coordinate::eta);
    double sup_w1 = 0.0;
    for (double eta = -1.0; eta <= 1.0; eta += 0.00493)
      sup_w1 = std::max(sup_w1, std::abs(eta_data.V1(eta)));
    CHECK(std::isfinite(sup_w1));
    CHECK(sup_w1 < 1e4);
  }
}

TEST_CASE("first separation constants reproduce the published table") {
  Context& ctx = shared_context();
  const SolveResult& gerade = ctx.solve(StateLabel::sigma_g(), 2.0);
  CHECK(gerade.a1x == doctest::Approx(0.811729588).epsilon(2e-6));
  CHECK(gerade.a1y == doctest::Approx(0.811729585).epsilon(2e-6));
  CHECK(consistency_gap(gerade) <= 1e-7);

  const SolveResult& ungerade = ctx.solve(StateLabel::sigma_u(), 2.0);
  CHECK(ungerade.a1x == doctest::Approx(-1.186889395).epsilon(2e-6));
  CHECK(ungerade.a1y == doctest::Approx(-1.186889393).epsilon(2e-6));
  CHECK(consistency_gap(ungerade) <= 1e-7);
}

TEST_CASE("large-distance separation constant against the reference column") {
  const SolveResult& solved = shared_context().solve(StateLabel::sigma_g(), 20.0);
  CHECK(std::abs(solved.a1x - 90.052891187) <= 2e-7);
  CHECK(std::abs(solved.a1y - 90.052891183) <= 2e-7);
}

TEST_CASE("denominator of the constant equals the squared norm") {
  const SolveResult& solved = shared_context().solve(StateLabel::sigma_g(), 2.0);
  const RiccatiData data = build_riccati(solved.params, Geometry{2.0}, Coordinate::xi);
  const QuadratureRule rule = semi_infinite_rule(200, 1.0 / solved.params.p);
  const double weight_norm = integrate([&](double xi) { return data.weight(xi); }, rule).value;
  const MomentBundle moments = compute_moments(solved.params, 200);
  CHECK(weight_norm == doctest::Approx(moments.n_xi.value).epsilon(1e-13));
  CHECK(weight_norm > 0.0);
}

TEST_CASE("correction profiles: anchors, parity, and regularity") {
  Context& ctx = shared_context();
  for (const StateLabel& state : {StateLabel::sigma_g(), StateLabel::sigma_u()}) {
    const SolveResult& solved = ctx.solve(state, 2.0);
    const RiccatiData xi_data = build_riccati(solved.params, Geometry{2.0}, Coordinate::xi);
    const RiccatiData eta_data = build_riccati(solved.params, Geometry{2.0}, Coordinate::eta);
    const CorrectionProfile xi_profile = first_correction(xi_data, solved.a1x, 200);
    const CorrectionProfile eta_profile = first_correction(eta_data, solved.a1y, 200);

    CHECK(xi_profile.phase.front() == 0.0);  // phi1(1) = 0
    CHECK(xi_profile.correction.front() ==
          doctest::Approx(0.5 * (solved.a1x - xi_data.V1(1.0))).epsilon(1e-10));
    // the defining cumulative closes at the far end
    CHECK(xi_profile.forward_tail_residual <= 1e-9);
    for (double value : xi_profile.phase) CHECK(std::isfinite(value));

    // odd correction, even phase, zero anchor at the symmetry point
    const std::size_t n = eta_profile.nodes.size();
    const std::size_t mid = n / 2;
    CHECK(eta_profile.nodes[mid] == 0.0);
    CHECK(eta_profile.correction[mid] == 0.0);
    CHECK(eta_profile.phase[mid] == 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(eta_profile.correction[i] == -eta_profile.correction[n - 1 - i]);
      CHECK(eta_profile.phase[i] == eta_profile.phase[n - 1 - i]);
      CHECK(std::isfinite(eta_profile.correction[i]));
    }
    // finite one-sided limit at the endpoint node
    CHECK(eta_profile.correction.back() ==
          doctest::Approx(0.5 * (solved.a1y - eta_data.V1(1.0))).epsilon(1e-10));
  }
}

TEST_CASE("the node numerator vanishes with the weight for the odd state") {
  // at eta = 0 the defining integral from -1 vanishes by parity and the
  // definition of the separation constant, making the correction a finite
  // 0/0 limit there
  const SolveResult& solved = shared_context().solve(StateLabel::sigma_u(), 2.0);
  const RiccatiData data = build_riccati(solved.params, Geometry{2.0}, Coordinate::eta);
  const QuadratureRule rule = gauss_rule(400);
  const auto numerator_to = [&](double eta_end, bool magnitude) {
    // int_{-1}^{eta_end} (a1 - w1) Y0^2, mapped onto [-1, 1]
    const double mid = 0.5 * (eta_end - 1.0), half = 0.5 * (eta_end + 1.0);
    long double sum = 0.0L;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double eta = mid + half * rule.nodes[i];
      const double sample = (solved.a1y - data.V1(eta)) * data.weight(eta);
      sum += static_cast<long double>(rule.weights[i]) * half *
             (magnitude ? std::abs(sample) : sample);
    }
    return static_cast<double>(sum);
  };
  // measure the cancellation against the size of the two integrals being
  // subtracted: a1 * norm versus the weighted perturbation
  const double subtracted_scale =
      std::abs(solved.a1y) *
      integrate([&](double eta) { return data.weight(eta); }, gauss_rule(200)).value;
  CHECK(std::abs(numerator_to(0.0, false)) <= 1e-10 * subtracted_scale);
  CHECK(std::abs(numerator_to(0.5, false)) > std::abs(numerator_to(0.0, false)));
}

TEST_CASE("identity correction leaves the trial untouched") {
  const SolveResult& solved = shared_context().solve(StateLabel::sigma_g(), 2.0);
  CorrectionProfile xi_profile;
  xi_profile.coordinate = Coordinate::xi;
  xi_profile.nodes = {1.0, 5.0, 40.0};
  xi_profile.correction = {0.0, 0.0, 0.0};
  xi_profile.phase = {0.0, 0.0, 0.0};
  CorrectionProfile eta_profile;
  eta_profile.coordinate = Coordinate::eta;
  eta_profile.nodes = {-1.0, 0.0, 1.0};
  eta_profile.correction = {0.0, 0.0, 0.0};
  eta_profile.phase = {0.0, 0.0, 0.0};
  const CorrectedWavefunction identity =
      corrected_trial(solved.params, xi_profile, eta_profile);
  for (double xi : {1.0, 2.7, 22.0})
    CHECK(identity.X(xi) == doctest::Approx(eval_X0(solved.params, xi)).epsilon(1e-15));
  for (double eta : {-0.8, 0.0, 0.6})
    CHECK(identity.Y(eta) == doctest::Approx(eval_Y0(solved.params, eta)).epsilon(1e-15));
  CHECK(identity.evaluate({2.0, 0.5, 0.0}) ==
        doctest::Approx(eval_X0(solved.params, 2.0) * eval_Y0(solved.params, 0.5))
            .epsilon(1e-15));
  // beyond the stored grid the point evaluator refuses to extrapolate
  CHECK_THROWS_AS(identity.X(41.0), domain_error);
  CHECK_THROWS_AS(identity.evaluate({100.0, 0.0, 0.0}), domain_error);
}

TEST_CASE("corrected energy moves below the tenth digit") {
  const SolveResult& solved = shared_context().solve(StateLabel::sigma_g(), 2.0);
  const CorrectedWavefunction corrected = build_corrected(solved, 200);
  const double dressed = corrected_energy(corrected, Geometry{2.0}, 200);
  CHECK(std::abs(dressed - solved.e_prime) <= 1e-10);
}

TEST_CASE("energy is stationary at the full correction strength") {
  // scale both phases by lambda in {0, 1/2, 1}: the fitted parabola through
  // the three energies bottoms out at full strength
  const SolveResult& solved = shared_context().solve(StateLabel::sigma_g(), 2.0);
  const RiccatiData xi_data = build_riccati(solved.params, Geometry{2.0}, Coordinate::xi);
  const RiccatiData eta_data = build_riccati(solved.params, Geometry{2.0}, Coordinate::eta);
  const CorrectionProfile xi_profile = first_correction(xi_data, solved.a1x, 200);
  const CorrectionProfile eta_profile = first_correction(eta_data, solved.a1y, 200);

  const auto scaled_energy = [&](double lambda) {
    CorrectionProfile xs = xi_profile, es = eta_profile;
    for (double& v : xs.correction) v *= lambda;
    for (double& v : xs.phase) v *= lambda;
    xs.phase_infinity *= lambda;
    for (double& v : es.correction) v *= lambda;
    for (double& v : es.phase) v *= lambda;
    return corrected_energy(CorrectedWavefunction(solved.params, xs, es), Geometry{2.0}, 200);
  };
  const double e0 = scaled_energy(0.0), e_half = scaled_energy(0.5), e1 = scaled_energy(1.0);
  // parabola through (0, 1/2, 1): vertex and its value
  const double curvature = 2.0 * (e0 - 2.0 * e_half + e1);
  REQUIRE(curvature != 0.0);
  const double vertex = 0.5 - 0.5 * (e1 - e0) / curvature;
  const double at_vertex = e_half + (vertex - 0.5) * 0.5 * (e1 - e0) +
                           0.5 * curvature * (vertex - 0.5) * (vertex - 0.5);
  CHECK(std::abs(at_vertex - e1) <= 1e-10);
}

TEST_CASE("re-optimizing p with corrections does not move it") {
  const SolveResult& solved = shared_context().solve(StateLabel::sigma_g(), 2.0);
  const PReoptimizeResult reopt = reoptimize_p(solved, 160);
  CHECK(reopt.relative_shift <= 1e-9);
  CHECK(reopt.energy_shift <= 1e-10);
  CHECK(reopt.p_corrected == doctest::Approx(solved.p_opt).epsilon(1e-8));
}

TEST_CASE("consistency gap carries the published smallness") {
  const SolveResult& solved = shared_context().solve(StateLabel::sigma_g(), 2.0);
  CHECK(consistency_gap(solved) <= 1e-7);
  SolveResult blank = solved;
  blank.a1x = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(consistency_gap(blank), usage_error);
}

TEST_SUITE_END();
