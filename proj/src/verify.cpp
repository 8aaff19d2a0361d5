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

#include "verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>

namespace h2p {
namespace {

using clock_type = std::chrono::steady_clock;

std::string format(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  char buffer[512];
  std::vsnprintf(buffer, sizeof buffer, fmt, args);
  va_end(args);
  return buffer;
}

struct Check {
  bool ok = true;
  std::string text;

  void require(bool condition, const std::string& piece) {
    ok = ok && condition;
    if (!text.empty()) text += "; ";
    text += piece + (condition ? "" : " [FAILED]");
  }
};

// reference energies [Ry]
struct EnergyRow {
  double R, e_total;
};
constexpr EnergyRow kTableGerade[] = {
    {1.0, -0.90357262676}, {2.0, -1.20526842899}, {6.0, -1.0239380968}, {10.0, -1.0011574578}};
constexpr EnergyRow kTableUngerade[] = {
    {1.0, 0.8703727499}, {2.0, -0.3350687844}, {4.0, -0.8911012787}, {10.0, -0.9998021372}};

// published p values with their printed decimal places and the energy a row
// pairs with (used to absorb the one table row whose printed p disagrees
// with its own printed energy by more than half an ulp)
struct PRow {
  bool gerade;
  double R, p, e_total;
  int decimals;
};
constexpr PRow kTableP[] = {
    {true, 1.0, 0.8519936, -0.90357262676, 7},  {true, 2.0, 1.485015, -1.20526842899, 6},
    {true, 6.0, 3.49506, -1.0239380968, 5},     {true, 10.0, 5.47987, -1.0011574578, 5},
    {false, 1.0, 0.5314196, 0.8703727499, 7},   {false, 2.0, 1.155452, -0.3350687844, 6},
    {false, 4.0, 2.3589, -0.8911012787, 4},     {false, 10.0, 5.47678, -0.9998021372, 5},
};

CriterionResult timed(int id, std::string title,
                      const std::function<void(Check&)>& body) {
  CriterionResult result;
  result.id = id;
  result.title = std::move(title);
  const auto start = clock_type::now();
  Check check;
  try {
    body(check);
    result.passed = check.ok;
    result.detail = check.text;
  } catch (const std::exception& error) {
    result.passed = false;
    result.detail = std::string("exception: ") + error.what();
  }
  result.seconds = std::chrono::duration<double>(clock_type::now() - start).count();
  return result;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(Context& ctx, const VerifyOptions& options) {
  std::vector<CriterionResult> results;
  const StateLabel gerade = StateLabel::sigma_g();
  const StateLabel ungerade = StateLabel::sigma_u();
  const bool quick = options.quick;
  const int order = std::max(ctx.options.quadrature_order, 200);

  results.push_back(timed(1, "ground-state energies (published table, tol 1e-8 Ry)",
                          [&](Check& check) {
    for (const EnergyRow& row : kTableGerade) {
      if (quick && row.R != 2.0) continue;
      const auto start = clock_type::now();
      const SolveResult& solved = ctx.solve(gerade, row.R);
      const double seconds = std::chrono::duration<double>(clock_type::now() - start).count();
      const double diff = std::abs(solved.e_total - row.e_total);
      check.require(diff <= 1e-8 && seconds <= 60.0,
                    format("R=%g |dE|=%.2e (%.1fs)", row.R, diff, seconds));
    }
  }));

  results.push_back(timed(2, "excited-state energies (published table, tol 1e-8 Ry)",
                          [&](Check& check) {
    for (const EnergyRow& row : kTableUngerade) {
      if (quick && row.R != 2.0) continue;
      const double diff = std::abs(ctx.solve(ungerade, row.R).e_total - row.e_total);
      check.require(diff <= 1e-8, format("R=%g |dE|=%.2e", row.R, diff));
    }
  }));

  results.push_back(timed(3, "p consistency and printed-p agreement", [&](Check& check) {
    for (const PRow& row : kTableP) {
      if (quick && row.R != 2.0) continue;
      const StateLabel state = row.gerade ? gerade : ungerade;
      const SolveResult& solved = ctx.solve(state, row.R);
      const double implied = p_from_electronic_energy(solved.e_prime, row.R);
      const double consistency = std::abs(solved.p_opt - implied) / solved.p_opt;
      check.require(consistency <= 1e-8,
                    format("%s R=%g consist=%.1e", state.name().c_str(), row.R, consistency));

      // half an ulp of the printed value, widened by any internal
      // disagreement between the row's own printed p and printed energy
      const double ulp = std::pow(10.0, -row.decimals);
      const double table_implied =
          p_from_electronic_energy(row.e_total - 2.0 / row.R, row.R);
      const double table_skew = std::abs(row.p - table_implied);
      const double allowance = 0.5 * ulp + (table_skew > 0.25 * ulp ? table_skew : 0.0);
      const double diff = std::abs(solved.p_opt - row.p);
      check.require(diff <= allowance,
                    format("%s R=%g |p-%.7g|=%.1e (allow %.1e)", state.name().c_str(), row.R,
                           row.p, diff, allowance));
    }
  }));

  results.push_back(timed(4, "first-order separation constants and consistency gaps",
                          [&](Check& check) {
    const SolveResult& g2 = ctx.solve(gerade, 2.0);
    check.require(std::abs(g2.a1x - 0.811729588) <= 1e-6,
                  format("1ssg A1x d=%.1e", std::abs(g2.a1x - 0.811729588)));
    check.require(std::abs(g2.a1y - 0.811729585) <= 1e-6,
                  format("1ssg A1y d=%.1e", std::abs(g2.a1y - 0.811729585)));
    const SolveResult& u2 = ctx.solve(ungerade, 2.0);
    check.require(std::abs(u2.a1x - (-1.186889395)) <= 1e-6,
                  format("2psu A1x d=%.1e", std::abs(u2.a1x + 1.186889395)));
    check.require(consistency_gap(g2) <= 1e-7, format("gap(2,1ssg)=%.1e", consistency_gap(g2)));
    check.require(consistency_gap(u2) <= 1e-7, format("gap(2,2psu)=%.1e", consistency_gap(u2)));
    if (!quick) {
      const double gap_g = consistency_gap(ctx.solve(gerade, 30.0));
      const double gap_u = consistency_gap(ctx.solve(ungerade, 30.0));
      check.require(gap_g <= 2e-9, format("gap(30,1ssg)=%.1e", gap_g));
      check.require(gap_u <= 2e-9, format("gap(30,2psu)=%.1e", gap_u));
    }
  }));

  results.push_back(timed(5, "oscillator strengths (published table)", [&](Check& check) {
    struct Row {
      double R, f01, rel_tol;
    };
    for (const Row& row : {Row{2.0, 0.639527, 1e-4}, Row{10.0, 2.217e-2, 1e-3},
                           Row{20.0, 8.191e-6, 1e-2}}) {
      if (quick && row.R != 2.0) continue;
      const TransitionResult t = ctx.oscillator(row.R);
      const double rel = std::abs(t.f01 - row.f01) / row.f01;
      check.require(rel <= row.rel_tol,
                    format("R=%g f01=%.6e rel=%.1e (tol %.0e)", row.R, t.f01, rel, row.rel_tol));
    }
  }));

  results.push_back(timed(6, "shooting-oracle equivalence", [&](Check& check) {
    for (const StateLabel& state : {gerade, ungerade}) {
      for (const double R : {1.0, 2.0, 6.0, 10.0}) {
        if (quick && R != 2.0) continue;
        const double diff =
            std::abs(ctx.solve_oracle(state, R).e_total - ctx.solve(state, R).e_total);
        check.require(diff <= 1e-9,
                      format("%s R=%g |dE|=%.1e", state.name().c_str(), R, diff));
      }
    }
    const double a_g2 = std::abs(ctx.solve_oracle(gerade, 2.0).A - 0.811729585);
    check.require(a_g2 <= 1e-7, format("A(2,1ssg) d=%.1e", a_g2));
    const double a_u2 = std::abs(ctx.solve_oracle(ungerade, 2.0).A - (-1.18688939));
    check.require(a_u2 <= 1e-7, format("A(2,2psu) d=%.1e", a_u2));
    if (!quick) {
      const double a_g20 = std::abs(ctx.solve_oracle(gerade, 20.0).A - 90.0528912);
      check.require(a_g20 <= 1e-7, format("A(20,1ssg) d=%.1e", a_g20));
    }
  }));

  results.push_back(timed(7, "pointwise accuracy of the corrected trial", [&](Check& check) {
    for (const StateLabel& state : {gerade, ungerade}) {
      const SolveResult& solved = ctx.solve(state, 2.0);
      const ShootResult& oracle = ctx.solve_oracle(state, 2.0);
      const CorrectedWavefunction corrected = build_corrected(solved, order);
      const double delta = pointwise_delta(
          [&](double xi, double eta) {
            return corrected.X_clamped(xi) * corrected.Y_clamped(eta);
          },
          oracle);
      check.require(delta <= 1e-4, format("%s delta=%.2e", state.name().c_str(), delta));
    }
  }));

  results.push_back(timed(8, "p re-optimization stability under corrections",
                          [&](Check& check) {
    for (const StateLabel& state : {gerade, ungerade}) {
      const PReoptimizeResult reopt = reoptimize_p(ctx.solve(state, 2.0), order);
      check.require(reopt.relative_shift <= 1e-9,
                    format("%s p-shift=%.1e", state.name().c_str(), reopt.relative_shift));
      check.require(reopt.energy_shift <= 1e-10,
                    format("%s dE=%.1e", state.name().c_str(), reopt.energy_shift));
    }
  }));

  results.push_back(timed(9, "reduced-parameter mode accuracy drop", [&](Check& check) {
    double mode_drop = 0.0;
    for (const StateLabel& state : {gerade, ungerade}) {
      const double drop =
          ctx.solve_reduced(state, 2.0).e_total - ctx.solve(state, 2.0).e_total;
      check.require(drop >= 0.0 && drop <= 1e-4,
                    format("%s drop=%.2e", state.name().c_str(), drop));
      mode_drop = std::max(mode_drop, drop);
    }
    check.require(mode_drop >= 1e-8 && mode_drop <= 1e-4,
                  format("mode drop=%.2e in [1e-8,1e-4]", mode_drop));
  }));

  results.push_back(timed(10, "property suite", [&](Check& check) {
    const SolveResult& solved = ctx.solve(gerade, 2.0);
    const SolveResult& odd = ctx.solve(ungerade, 2.0);

    // exact parity identities
    bool parity_exact = true;
    for (int i = 1; i <= 20; ++i) {
      const double eta = i / 20.5;
      parity_exact = parity_exact &&
                     eval_Y0(solved.params, eta) == eval_Y0(solved.params, -eta) &&
                     eval_Y0(odd.params, eta) == -eval_Y0(odd.params, -eta);
    }
    check.require(parity_exact, "parity identities exact");

    // Gauss degree exactness: int_{-1}^{1} eta^{2k} = 2/(2k+1)
    const QuadratureRule rule = gauss_rule(40);
    double worst_gauss = 0.0;
    for (int k = 30; k <= 39; ++k) {
      const double value = weighted_sum(rule, [&](double x) { return std::pow(x, 2 * k); });
      worst_gauss = std::max(worst_gauss,
                             std::abs(value - 2.0 / (2 * k + 1)) / (2.0 / (2 * k + 1)));
    }
    check.require(worst_gauss <= 1e-13, format("Gauss exactness %.1e", worst_gauss));

    // factorized moments against a direct 2-D tensor quadrature of the
    // Rayleigh quotient
    {
      const TrialParams& params = solved.params;
      const double R = params.R;
      const QuadratureRule xi_rule = semi_infinite_rule(order, 1.0 / params.p);
      const QuadratureRule eta_rule = gauss_rule(order);
      long double kinetic = 0, coulomb = 0, norm = 0;
      for (std::size_t i = 0; i < xi_rule.nodes.size(); ++i) {
        const double xi = xi_rule.nodes[i];
        const XiParts xp = eval_xi_parts(params, xi);
        for (std::size_t j = 0; j < eta_rule.nodes.size(); ++j) {
          const double eta = eta_rule.nodes[j];
          const EtaParts ep = eval_eta_parts(params, eta);
          const long double w =
              static_cast<long double>(xi_rule.weights[i]) * eta_rule.weights[j];
          kinetic += w * (4.0 / (R * R)) *
                     ((xi * xi - 1.0) * xp.derivative * xp.derivative * ep.value * ep.value +
                      (1.0 - eta * eta) * xp.value * xp.value * ep.derivative * ep.derivative);
          coulomb += w * (-8.0 / R) * xi * xp.value * xp.value * ep.value * ep.value;
          norm += w * xp.value * xp.value * ep.value * ep.value * (xi * xi - eta * eta);
        }
      }
      const double brute = static_cast<double>((kinetic + coulomb) / norm);
      const double factorized = energy_expectation(params, Geometry{R}, order).e_prime;
      const double rel = std::abs(brute - factorized) / std::abs(factorized);
      check.require(rel <= 1e-10, format("2-D cross-check rel=%.1e", rel));
    }

    // bounded perturbations
    {
      const RiccatiData xi_data(solved.params, Coordinate::xi);
      double sup_v1 = 0.0;
      for (int i = 0; i <= 400; ++i) sup_v1 = std::max(sup_v1, std::abs(xi_data.V1(1.0 + 99.0 * i / 400.0)));
      const RiccatiData eta_data(odd.params, Coordinate::eta);
      double sup_w1 = 0.0;
      for (int i = 0; i <= 400; ++i)
        sup_w1 = std::max(sup_w1, std::abs(eta_data.V1(-1.0 + 2.0 * i / 400.0)));
      check.require(std::isfinite(sup_v1) && sup_v1 < 1e6 && std::isfinite(sup_w1) && sup_w1 < 1e6,
                    format("sup|V1|=%.3g sup|W1|=%.3g", sup_v1, sup_w1));
    }

    // analytic log-derivatives against central differences
    {
      const TrialParams& params = solved.params;
      const double h = 1e-6;
      const double fd_x =
          -(std::log(eval_X0(params, 1.7 + h)) - std::log(eval_X0(params, 1.7 - h))) / (2 * h);
      const double rel_x =
          std::abs(fd_x - log_derivative_X0(params, 1.7)) / std::abs(fd_x);
      const double fd_y =
          -(std::log(eval_Y0(params, 0.3 + h)) - std::log(eval_Y0(params, 0.3 - h))) / (2 * h);
      const double rel_y =
          std::abs(fd_y - log_derivative_Y0(params, 0.3)) / std::abs(fd_y);
      check.require(rel_x <= 1e-8 && rel_y <= 1e-8,
                    format("log-derivative FD rel=(%.1e, %.1e)", rel_x, rel_y));
    }
  }));

  return results;
}

}  // namespace h2p
