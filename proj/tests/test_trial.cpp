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
#include <fstream>
#include <random>
#include <sstream>

#include <doctest.h>

#include "errors.hpp"
#include "presets.hpp"
#include "trial.hpp"

using namespace h2p;

namespace {

// published optimizer anchors used as realistic evaluation points
TrialParams anchor_gerade() {
  TrialParams t;
  t.alpha = 1.48407;
  t.gamma = 1.0299;
  t.a1 = 0.9164;
  t.a2 = 0.05384;
  t.b2 = 0.06;
  t.b3 = 0.00011;
  t.p = 1.483403;
  t.state = StateLabel::sigma_g();
  t.R = 1.997193;
  return t;
}

TrialParams anchor_ungerade() {
  TrialParams t;
  t.alpha = 3.24715;
  t.gamma = 0.95706;
  t.a1 = 2.84566;
  t.a2 = 0.22098;
  t.b2 = 0.23611;
  t.b3 = -0.0027;
  t.p = 3.43971;
  t.state = StateLabel::sigma_u();
  t.R = 6.0;
  return t;
}

}  // namespace

TEST_SUITE_BEGIN("trial");

TEST_CASE("X0 at the inner endpoint has the closed form") {
  const TrialParams t = anchor_gerade();
  const double expected = std::pow(t.gamma + 1.0, t.R / t.p - 1.0) *
                          std::exp(-(t.alpha + t.p) / (t.gamma + 1.0));
  CHECK(eval_X0(t, 1.0) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("X0 matches independent arithmetic at the anchor") {
  const TrialParams t = anchor_gerade();
  const double xi = 2.0;
  // the trial form written out directly, term by term
  const double direct = std::pow(t.gamma + xi, t.R / t.p - 1.0) *
                        std::exp(-xi * (t.alpha + t.p * xi) / (t.gamma + xi));
  CHECK(eval_X0(t, xi) == doctest::Approx(direct).epsilon(1e-14));
  CHECK(direct == doctest::Approx(0.0777684322).epsilon(1e-8));
}

TEST_CASE("large-xi behavior reproduces the tail") {
  const TrialParams t = anchor_gerade();
  const double nu = t.R / t.p - 1.0;
  double bound = 0.0;
  for (double xi = 10.0; xi <= 1000.0; xi *= 1.77) {
    const double log_x0 = nu * std::log(t.gamma + xi) -
                          xi * (t.alpha + t.p * xi) / (t.gamma + xi);
    bound = std::max(bound, std::abs(log_x0 + t.p * xi - nu * std::log(xi)));
  }
  CHECK(bound < 10.0);  // bounded, no residual growth

  // |x0 - (p - nu/xi)| <= C / xi^2 with a stable fitted constant
  double c_fit = 0.0;
  for (double xi = 50.0; xi <= 200.0; xi += 7.5) {
    const double defect = std::abs(log_derivative_X0(t, xi) - (t.p - nu / xi));
    c_fit = std::max(c_fit, defect * xi * xi);
  }
  CHECK(c_fit < 2.0 * std::abs(t.gamma) * (std::abs(nu) + std::abs(t.alpha) +
                                           std::abs(t.p * t.gamma)) + 1.0);
}

TEST_CASE("Y0 parity values at the node") {
  const TrialParams plus = anchor_gerade();
  CHECK(eval_Y0(plus, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  const TrialParams minus = anchor_ungerade();
  CHECK(eval_Y0(minus, 0.0) == 0.0);
}

TEST_CASE("Y0 matches independent arithmetic at the published column") {
  const TrialParams t = anchor_ungerade();
  const double eta = 0.5;
  const double e2 = eta * eta;
  const double denom = 1.0 + t.b2 * e2 + t.b3 * e2 * e2;
  const double arg = eta * (t.a1 + t.p * t.a2 * e2 + t.p * t.b3 * e2 * e2) / denom;
  const double direct = std::sinh(arg) / std::pow(denom, 0.25);
  CHECK(eval_Y0(t, eta) == doctest::Approx(direct).epsilon(1e-14));
  CHECK(direct == doctest::Approx(1.9487047931).epsilon(1e-8));
}

TEST_CASE("parity identities hold exactly") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  const TrialParams plus = anchor_gerade();
  const TrialParams minus = anchor_ungerade();
  for (int i = 0; i < 100; ++i) {
    const double eta = dist(rng);
    CHECK(eval_Y0(plus, eta) == eval_Y0(plus, -eta));
    CHECK(eval_Y0(minus, eta) == -eval_Y0(minus, -eta));
    CHECK(eval_Y0_derivative(plus, eta) == -eval_Y0_derivative(plus, -eta));
    CHECK(eval_Y0_derivative(minus, eta) == eval_Y0_derivative(minus, -eta));
  }
}

TEST_CASE("positivity and the single node") {
  const TrialParams plus = anchor_gerade();
  const TrialParams minus = anchor_ungerade();
  for (double xi = 1.0; xi < 30.0; xi += 0.7) CHECK(eval_X0(plus, xi) > 0.0);
  for (double eta = -1.0; eta <= 1.0; eta += 0.05) {
    CHECK(eval_Y0(plus, eta) > 0.0);
    if (eta != 0.0) CHECK(eval_Y0(minus, eta) * eta > 0.0);  // sign flips only at 0
  }
}

TEST_CASE("analytic log-derivatives against finite differences") {
  const TrialParams t = anchor_gerade();
  const double h = 1e-6;
  const double fd_x =
      -(std::log(eval_X0(t, 1.7 + h)) - std::log(eval_X0(t, 1.7 - h))) / (2.0 * h);
  CHECK(log_derivative_X0(t, 1.7) == doctest::Approx(fd_x).epsilon(1e-8));
  const double fd_y =
      -(std::log(eval_Y0(t, 0.3 + h)) - std::log(eval_Y0(t, 0.3 - h))) / (2.0 * h);
  CHECK(log_derivative_Y0(t, 0.3) == doctest::Approx(fd_y).epsilon(1e-8));

  // derivative of the value itself, against central differences
  const double fd_dx = (eval_X0(t, 1.7 + h) - eval_X0(t, 1.7 - h)) / (2.0 * h);
  CHECK(eval_X0_derivative(t, 1.7) == doctest::Approx(fd_dx).epsilon(1e-8));
  const double fd_dy = (eval_Y0(t, 0.3 + h) - eval_Y0(t, 0.3 - h)) / (2.0 * h);
  CHECK(eval_Y0_derivative(t, 0.3) == doctest::Approx(fd_dy).epsilon(1e-8));
}

TEST_CASE("log-derivative edge behavior") {
  const TrialParams plus = anchor_gerade();
  CHECK(log_derivative_Y0(plus, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(log_derivative_X0(plus, 1e7) == doctest::Approx(plus.p).epsilon(1e-5));
  const TrialParams minus = anchor_ungerade();
  CHECK_THROWS_AS(log_derivative_Y0(minus, 0.0), singular_error);
}

TEST_CASE("small-eta phase is even with the expected curvature") {
  const TrialParams t = anchor_gerade();
  const auto rho = [&](double eta) { return -std::log(eval_Y0(t, eta)); };
  CHECK(rho(0.0) == 0.0);
  const double h = 1e-4;
  const double second = (rho(h) - 2.0 * rho(0.0) + rho(-h)) / (h * h);
  CHECK(second == doctest::Approx(t.b2 / 2.0 - t.a1 * t.a1).epsilon(1e-6));
  CHECK(rho(0.37) == rho(-0.37));  // no odd terms at all
}

TEST_CASE("feasibility guards") {
  TrialParams t = anchor_gerade();
  t.gamma = -1.5;
  CHECK(!t.feasible());
  CHECK_THROWS_AS(t.validate(), domain_error);
  t = anchor_gerade();
  t.b2 = -3.0;  // denominator dips negative inside (0, 1)
  CHECK(!t.feasible());
  t = anchor_gerade();
  t.p = 0.0;
  CHECK(!t.feasible());
  CHECK_THROWS_AS(eval_X0(anchor_gerade(), -3.0), domain_error);
}

TEST_CASE("reference forms: distance and prolate expressions agree") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> xi_dist(1.0, 4.0);
  std::uniform_real_distribution<double> eta_dist(-1.0, 1.0);
  const Geometry geometry{2.0};
  ReferenceForm hm{ReferenceForm::Kind::hund_mulliken, Parity::gerade, 0.7, 0, 0};
  ReferenceForm hm_minus{ReferenceForm::Kind::hund_mulliken, Parity::ungerade, 0.7, 0, 0};
  ReferenceForm gz{ReferenceForm::Kind::guillemin_zener, Parity::gerade, 0, 0.8, 0.45};
  for (int i = 0; i < 100; ++i) {
    const ProlatePoint point{xi_dist(rng), eta_dist(rng), 0.0};
    const auto [r1, r2] = from_prolate(point, geometry.R);
    for (const ReferenceForm& form : {hm, hm_minus, gz}) {
      const double via_distances = eval_reference_distances(form, r1, r2);
      const double via_prolate = eval_reference(form, geometry, point);
      CHECK(via_prolate ==
            doctest::Approx(via_distances).epsilon(1e-13).scale(std::abs(via_prolate) + 1e-30));
    }
  }
}

TEST_CASE("reference form special values") {
  const Geometry geometry{2.0};
  ReferenceForm hm{ReferenceForm::Kind::hund_mulliken, Parity::gerade, 0.9, 0, 0};
  CHECK(eval_reference(hm, geometry, {1.5, 0.0, 0.0}) ==
        doctest::Approx(2.0 * std::exp(-0.9 * 2.0 * 1.5)).epsilon(1e-14));

  // equal exponents degrade the coherent form's eta factor to cosh(0)/sinh(0)
  ReferenceForm gz_plus{ReferenceForm::Kind::guillemin_zener, Parity::gerade, 0, 0.6, 0.6};
  ReferenceForm gz_minus{ReferenceForm::Kind::guillemin_zener, Parity::ungerade, 0, 0.6, 0.6};
  for (double eta : {-0.8, 0.0, 0.5}) {
    CHECK(eval_reference(gz_plus, geometry, {2.0, eta, 0.0}) ==
          doctest::Approx(2.0 * std::exp(-1.2 * 2.0 * 2.0)).epsilon(1e-14));
    CHECK(eval_reference(gz_minus, geometry, {2.0, eta, 0.0}) == 0.0);
  }
  ReferenceForm bad{ReferenceForm::Kind::hund_mulliken, Parity::gerade, -1.0, 0, 0};
  CHECK_THROWS_AS(eval_reference(bad, geometry, {1.5, 0.0, 0.0}), domain_error);
}

TEST_CASE("preset table and data file stay in sync") {
  for (const char* name : {"1ssg", "2psu"}) {
    const StateLabel state = *StateLabel::parse(name);
    for (const Preset& preset : preset_table(state)) {
      const TrialParams params = params_from_preset(state, preset);
      CHECK(params.feasible());
    }
  }
#ifdef H2P_SOURCE_DIR
  std::ifstream file(std::string(H2P_SOURCE_DIR) + "/data/presets.txt", std::ios::binary);
  REQUIRE(file.good());
  std::stringstream buffer;
  buffer << file.rdbuf();
  CHECK(buffer.str() == preset_file_contents());
#endif
}

TEST_CASE("continuation paths end at the target") {
  for (double R : {0.3, 1.0, 2.0, 7.5, 30.0}) {
    const auto path = continuation_path(StateLabel::sigma_g(), R);
    REQUIRE(!path.empty());
    CHECK(path.back() == doctest::Approx(R).epsilon(1e-14));
    for (std::size_t i = 1; i < path.size(); ++i) {
      const double ratio = std::max(path[i] / path[i - 1], path[i - 1] / path[i]);
      CHECK(ratio < 1.2);
    }
  }
  CHECK(seed_params(StateLabel::sigma_u(), 1.0).feasible());
  CHECK(trend_params(StateLabel::sigma_g(), 30.0, 15.49).feasible());
}

TEST_SUITE_END();
