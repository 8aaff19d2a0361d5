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
#include <cstring>
#include <string>

#include <doctest.h>

#include "h2plus/h2plus.h"

TEST_SUITE_BEGIN("capi");

namespace {

struct Ctx {
  h2p_context* ptr = h2p_context_create();
  ~Ctx() { h2p_context_destroy(ptr); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(h2p_version()) > 0);
  CHECK(std::string(h2p_status_name(H2P_OK)) == "ok");
  CHECK(std::string(h2p_status_name(H2P_ERR_UNSUPPORTED_STATE)) == "unsupported state");
}

TEST_CASE("context configuration guards") {
  Ctx ctx;
  REQUIRE(ctx.ptr != nullptr);
  CHECK(h2p_context_set_quadrature_order(ctx.ptr, 160) == H2P_OK);
  CHECK(h2p_context_set_quadrature_order(ctx.ptr, 0) == H2P_ERR_INVALID_ARGUMENT);
  CHECK(std::string(h2p_context_last_error(ctx.ptr)).find("order") != std::string::npos);
  CHECK(h2p_context_set_optimizer_budget(ctx.ptr, 10) == H2P_ERR_INVALID_ARGUMENT);
  CHECK(h2p_context_set_optimizer_budget(ctx.ptr, 400000) == H2P_OK);
}

TEST_CASE("solve and inspect a result") {
  Ctx ctx;
  h2p_result* result = nullptr;
  REQUIRE(h2p_solve(ctx.ptr, "1ssg", 2.0, &result) == H2P_OK);
  REQUIRE(result != nullptr);
  CHECK(h2p_result_e_total(result) == doctest::Approx(-1.20526842899).epsilon(1e-9));
  CHECK(h2p_result_e_total(result) ==
        doctest::Approx(h2p_result_e_electronic(result) + 1.0).epsilon(1e-13));
  CHECK(h2p_result_p(result) == doctest::Approx(1.485015).epsilon(1e-6));
  CHECK(h2p_result_param(result, H2P_PARAM_P) == h2p_result_p(result));
  CHECK(h2p_result_R(result) == 2.0);
  CHECK(std::string(h2p_result_state(result)) == "1ssg");
  CHECK(h2p_result_consistency_gap(result) ==
        doctest::Approx(std::abs(h2p_result_a1x(result) - h2p_result_a1y(result)))
            .epsilon(1e-15));
  CHECK(h2p_result_evaluations(result) > 0);
  CHECK(h2p_result_quadrature_error(result) < 1e-11);
  CHECK(!h2p_result_has_oracle(result));
  h2p_result_destroy(result);
}

TEST_CASE("solve rejections carry messages") {
  Ctx ctx;
  h2p_result* result = nullptr;
  CHECK(h2p_solve(ctx.ptr, "3dsg", 2.0, &result) == H2P_ERR_UNSUPPORTED_STATE);
  CHECK(result == nullptr);
  CHECK(std::string(h2p_context_last_error(ctx.ptr)).find("3dsg") != std::string::npos);
  CHECK(h2p_solve(ctx.ptr, "1ssg", -2.0, &result) == H2P_ERR_DOMAIN);
  CHECK(h2p_solve(ctx.ptr, nullptr, 2.0, &result) == H2P_ERR_INVALID_ARGUMENT);
  CHECK(h2p_solve(nullptr, "1ssg", 2.0, &result) == H2P_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verified solve attaches the cross-check") {
  Ctx ctx;
  h2p_result* result = nullptr;
  REQUIRE(h2p_solve_verified(ctx.ptr, "2psu", 2.0, &result) == H2P_OK);
  CHECK(h2p_result_has_oracle(result));
  CHECK(h2p_result_oracle_abs_de(result) <= 1e-9);
  CHECK(h2p_result_oracle_A(result) == doctest::Approx(-1.18688939).epsilon(1e-7));
  h2p_result_destroy(result);
}

TEST_CASE("reduced solve stays above the full one") {
  Ctx ctx;
  h2p_result* full = nullptr;
  h2p_result* reduced = nullptr;
  REQUIRE(h2p_solve(ctx.ptr, "1ssg", 2.0, &full) == H2P_OK);
  REQUIRE(h2p_solve_reduced(ctx.ptr, "1ssg", 2.0, &reduced) == H2P_OK);
  CHECK(h2p_result_param(reduced, H2P_PARAM_A2) == 0.0);
  CHECK(h2p_result_param(reduced, H2P_PARAM_B2) == 0.0);
  CHECK(h2p_result_e_total(reduced) >= h2p_result_e_total(full));
  h2p_result_destroy(full);
  h2p_result_destroy(reduced);
}

TEST_CASE("curves expose per-point results") {
  Ctx ctx;
  const double grid[2] = {1.9, 2.0};
  h2p_curve* curve = nullptr;
  REQUIRE(h2p_curve_run(ctx.ptr, "1ssg", grid, 2, &curve) == H2P_OK);
  REQUIRE(h2p_curve_size(curve) == 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(h2p_curve_at(curve, i) != nullptr);
    CHECK(h2p_curve_point_error(curve, i) == nullptr);
    CHECK(h2p_curve_R(curve, i) == grid[i]);
  }
  CHECK(h2p_result_e_total(h2p_curve_at(curve, 1)) ==
        doctest::Approx(-1.20526842899).epsilon(1e-9));
  h2p_curve_destroy(curve);

  // unsorted grids are a usage error
  const double bad[2] = {2.0, 1.0};
  h2p_curve* rejected = nullptr;
  CHECK(h2p_curve_run(ctx.ptr, "1ssg", bad, 2, &rejected) == H2P_ERR_INVALID_ARGUMENT);
}

TEST_CASE("transition record") {
  Ctx ctx;
  h2p_transition* transition = nullptr;
  REQUIRE(h2p_oscillator(ctx.ptr, 2.0, &transition) == H2P_OK);
  CHECK(h2p_transition_f01(transition) == doctest::Approx(0.639527).epsilon(1e-4));
  CHECK(h2p_transition_delta_e(transition) ==
        doctest::Approx(h2p_transition_e_u(transition) - h2p_transition_e_g(transition))
            .epsilon(1e-14));
  CHECK(h2p_transition_q_z(transition) > 0.0);
  CHECK(h2p_transition_R(transition) == 2.0);
  h2p_transition_destroy(transition);
}

TEST_CASE("correction handle and profile export") {
  Ctx ctx;
  h2p_correction* correction = nullptr;
  REQUIRE(h2p_correction_run(ctx.ptr, "1ssg", 2.0, &correction) == H2P_OK);
  CHECK(h2p_correction_gap(correction) <= 1e-7);

  const int n_phi = h2p_correction_profile_size(correction, H2P_PROFILE_PHI1);
  REQUIRE(n_phi > 10);
  double node = -1.0, value = -1.0;
  CHECK(h2p_correction_profile_point(correction, H2P_PROFILE_PHI1, 0, &node, &value) == H2P_OK);
  CHECK(node == 1.0);   // anchored at the inner endpoint
  CHECK(value == 0.0);  // phi1(1) = 0
  const int n_rho = h2p_correction_profile_size(correction, H2P_PROFILE_RHO1);
  CHECK(h2p_correction_profile_point(correction, H2P_PROFILE_RHO1, n_rho / 2, &node, &value) ==
        H2P_OK);
  CHECK(node == 0.0);
  CHECK(value == 0.0);  // rho1(0) = 0
  CHECK(h2p_correction_profile_point(correction, H2P_PROFILE_RHO1, n_rho, &node, &value) ==
        H2P_ERR_INVALID_ARGUMENT);

  double psi = 0.0;
  CHECK(h2p_correction_evaluate(correction, 1.7, 0.3, &psi) == H2P_OK);
  CHECK(psi > 0.0);
  CHECK(h2p_correction_evaluate(correction, 1e9, 0.3, &psi) == H2P_ERR_DOMAIN);
  h2p_correction_destroy(correction);
}

TEST_CASE("oracle handle") {
  Ctx ctx;
  h2p_oracle* oracle = nullptr;
  REQUIRE(h2p_oracle_run(ctx.ptr, "1ssg", 2.0, &oracle) == H2P_OK);
  CHECK(h2p_oracle_e_total(oracle) == doctest::Approx(-1.20526842899).epsilon(1e-9));
  CHECK(h2p_oracle_A(oracle) == doctest::Approx(0.811729585).epsilon(1e-7));
  CHECK(h2p_oracle_residual_xi(oracle) <= 1e-11);
  CHECK(h2p_oracle_residual_eta(oracle) <= 1e-11);
  h2p_oracle_destroy(oracle);
}

TEST_CASE("pointwise delta through the interface") {
  Ctx ctx;
  double delta = 1.0;
  REQUIRE(h2p_pointwise_delta(ctx.ptr, "1ssg", 2.0, 1, &delta) == H2P_OK);
  CHECK(delta <= 1e-4);
  double bare = 0.0;
  REQUIRE(h2p_pointwise_delta(ctx.ptr, "1ssg", 2.0, 0, &bare) == H2P_OK);
  CHECK(bare <= 1e-4);
  CHECK(delta < bare);
}

TEST_SUITE_END();
