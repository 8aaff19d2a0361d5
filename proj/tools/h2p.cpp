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

// Command-line front end; talks to the library exclusively through the
// extern-C interface in h2plus/h2plus.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "h2plus/h2plus.h"

namespace {

using nlohmann::json;

std::string fmt12(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

struct ContextHandle {
  h2p_context* ptr = h2p_context_create();
  ~ContextHandle() { h2p_context_destroy(ptr); }
};

struct CommonOptions {
  int order = 200;
  long budget = 400000;
  std::string format = "csv";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  const char* env_order = std::getenv("H2P_QUADRATURE_ORDER");
  if (env_order) {
    const int parsed = std::atoi(env_order);
    if (parsed > 0) common.order = parsed;
  }
  cmd->add_option("--order", common.order, "Quadrature nodes per coordinate")
      ->check(CLI::Range(8, 4000));
  cmd->add_option("--budget", common.budget, "Optimizer evaluation budget");
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", common.out_path, "Write output to this file instead of stdout");
}

int apply_common(h2p_context* ctx, const CommonOptions& common) {
  if (h2p_context_set_quadrature_order(ctx, common.order) != H2P_OK ||
      h2p_context_set_optimizer_budget(ctx, common.budget) != H2P_OK) {
    std::cerr << "error: " << h2p_context_last_error(ctx) << "\n";
    return 1;
  }
  return 0;
}

int emit(const CommonOptions& common, const std::string& text) {
  if (common.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(common.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << common.out_path << "' for writing\n";
    return 1;
  }
  out << text;
  return 0;
}

std::string csv_preamble(const std::string& command_echo) {
  std::string text;
  text += std::string("# h2plus ") + h2p_version() + "\n";
  text += "# command: " + command_echo + "\n";
  text += "# units: R [Bohr], energies [Ry], Q_z [Bohr]; p, A, f01 dimensionless\n";
  return text;
}

const char* kResultColumns =
    "R,state,E_total,E_prime,p,alpha,gamma,a1,a2,b2,b3,A1x,A1y,gap,iterations,evaluations,"
    "quad_error";

std::string result_row(const h2p_result* result) {
  std::string row;
  row += fmt12(h2p_result_R(result));
  row += std::string(",") + h2p_result_state(result);
  row += "," + fmt12(h2p_result_e_total(result));
  row += "," + fmt12(h2p_result_e_electronic(result));
  row += "," + fmt12(h2p_result_p(result));
  for (h2p_param which : {H2P_PARAM_ALPHA, H2P_PARAM_GAMMA, H2P_PARAM_A1, H2P_PARAM_A2,
                          H2P_PARAM_B2, H2P_PARAM_B3})
    row += "," + fmt12(h2p_result_param(result, which));
  row += "," + fmt12(h2p_result_a1x(result));
  row += "," + fmt12(h2p_result_a1y(result));
  row += "," + fmt12(h2p_result_consistency_gap(result));
  row += "," + std::to_string(h2p_result_iterations(result));
  row += "," + std::to_string(h2p_result_evaluations(result));
  row += "," + fmt12(h2p_result_quadrature_error(result));
  return row;
}

json result_record(const h2p_result* result) {
  json record;
  record["R"] = h2p_result_R(result);
  record["state"] = h2p_result_state(result);
  record["E_total"] = h2p_result_e_total(result);
  record["E_prime"] = h2p_result_e_electronic(result);
  record["p"] = h2p_result_p(result);
  record["parameters"] = {{"alpha", h2p_result_param(result, H2P_PARAM_ALPHA)},
                          {"gamma", h2p_result_param(result, H2P_PARAM_GAMMA)},
                          {"a1", h2p_result_param(result, H2P_PARAM_A1)},
                          {"a2", h2p_result_param(result, H2P_PARAM_A2)},
                          {"b2", h2p_result_param(result, H2P_PARAM_B2)},
                          {"b3", h2p_result_param(result, H2P_PARAM_B3)},
                          {"p", h2p_result_param(result, H2P_PARAM_P)}};
  record["A1x"] = h2p_result_a1x(result);
  record["A1y"] = h2p_result_a1y(result);
  record["consistency_gap"] = h2p_result_consistency_gap(result);
  record["iterations"] = h2p_result_iterations(result);
  record["evaluations"] = h2p_result_evaluations(result);
  record["quadrature_error"] = h2p_result_quadrature_error(result);
  if (h2p_result_has_oracle(result)) {
    record["oracle"] = {{"E_total", h2p_result_oracle_e_total(result)},
                        {"A", h2p_result_oracle_A(result)},
                        {"abs_dE", h2p_result_oracle_abs_de(result)}};
  }
  return record;
}

std::vector<double> build_grid(const std::vector<double>& list, double r_min, double r_max,
                               int count) {
  if (!list.empty()) return list;
  std::vector<double> grid;
  if (count == 1) {
    grid.push_back(r_min);
    return grid;
  }
  for (int i = 0; i < count; ++i)
    grid.push_back(r_min + (r_max - r_min) * static_cast<double>(i) / (count - 1));
  return grid;
}

int run_solve(const std::string& echo, const CommonOptions& common, const std::string& state,
              double R, bool with_oracle) {
  ContextHandle ctx;
  if (apply_common(ctx.ptr, common)) return 1;
  h2p_result* result = nullptr;
  const h2p_status status = with_oracle ? h2p_solve_verified(ctx.ptr, state.c_str(), R, &result)
                                        : h2p_solve(ctx.ptr, state.c_str(), R, &result);
  if (status != H2P_OK) {
    std::cerr << "error: " << h2p_context_last_error(ctx.ptr) << "\n";
    return status == H2P_ERR_NO_CONVERGENCE ? 2 : 1;
  }
  std::unique_ptr<h2p_result, decltype(&h2p_result_destroy)> guard(result, h2p_result_destroy);

  std::string text;
  if (common.format == "json") {
    text = result_record(result).dump(2) + "\n";
  } else {
    text = csv_preamble(echo);
    text += kResultColumns;
    if (with_oracle) text += ",E_oracle,A_oracle,abs_dE";
    text += "\n" + result_row(result);
    if (with_oracle) {
      text += "," + fmt12(h2p_result_oracle_e_total(result));
      text += "," + fmt12(h2p_result_oracle_A(result));
      text += "," + fmt12(h2p_result_oracle_abs_de(result));
    }
    text += "\n";
  }
  return emit(common, text);
}

int run_curve(const std::string& echo, const CommonOptions& common, const std::string& state,
              const std::vector<double>& grid) {
  ContextHandle ctx;
  if (apply_common(ctx.ptr, common)) return 1;
  h2p_curve* curve = nullptr;
  if (h2p_curve_run(ctx.ptr, state.c_str(), grid.data(), static_cast<int>(grid.size()),
                    &curve) != H2P_OK) {
    std::cerr << "error: " << h2p_context_last_error(ctx.ptr) << "\n";
    return 1;
  }
  std::unique_ptr<h2p_curve, decltype(&h2p_curve_destroy)> guard(curve, h2p_curve_destroy);

  bool any_failed = false;
  std::string text;
  if (common.format == "json") {
    json records = json::array();
    for (int i = 0; i < h2p_curve_size(curve); ++i) {
      const h2p_result* point = h2p_curve_at(curve, i);
      if (point) {
        json record = result_record(point);
        record["status"] = "ok";
        records.push_back(record);
      } else {
        any_failed = true;
        records.push_back({{"R", h2p_curve_R(curve, i)},
                           {"status", "error"},
                           {"error", h2p_curve_point_error(curve, i)}});
      }
    }
    text = records.dump(2) + "\n";
  } else {
    text = csv_preamble(echo);
    text += std::string(kResultColumns) + ",status\n";
    for (int i = 0; i < h2p_curve_size(curve); ++i) {
      const h2p_result* point = h2p_curve_at(curve, i);
      if (point) {
        text += result_row(point) + ",ok\n";
      } else {
        any_failed = true;
        text += fmt12(h2p_curve_R(curve, i)) + "," + state + ",,,,,,,,,,,,,,,,error\n";
      }
    }
  }
  const int emitted = emit(common, text);
  return emitted != 0 ? emitted : (any_failed ? 2 : 0);
}

int run_oscillator(const std::string& echo, const CommonOptions& common,
                   const std::vector<double>& grid) {
  ContextHandle ctx;
  if (apply_common(ctx.ptr, common)) return 1;
  std::string text;
  json records = json::array();
  if (common.format == "csv") text = csv_preamble(echo) + "R,E_g,E_u,Q_z,f01\n";
  for (const double R : grid) {
    h2p_transition* transition = nullptr;
    if (h2p_oscillator(ctx.ptr, R, &transition) != H2P_OK) {
      std::cerr << "error: " << h2p_context_last_error(ctx.ptr) << "\n";
      return 2;
    }
    std::unique_ptr<h2p_transition, decltype(&h2p_transition_destroy)> guard(
        transition, h2p_transition_destroy);
    if (common.format == "json") {
      records.push_back({{"R", h2p_transition_R(transition)},
                         {"E_g", h2p_transition_e_g(transition)},
                         {"E_u", h2p_transition_e_u(transition)},
                         {"delta_E", h2p_transition_delta_e(transition)},
                         {"Q_z", h2p_transition_q_z(transition)},
                         {"f01", h2p_transition_f01(transition)}});
    } else {
      text += fmt12(h2p_transition_R(transition)) + "," + fmt12(h2p_transition_e_g(transition)) +
              "," + fmt12(h2p_transition_e_u(transition)) + "," +
              fmt12(h2p_transition_q_z(transition)) + "," +
              fmt12(h2p_transition_f01(transition)) + "\n";
    }
  }
  if (common.format == "json") text = records.dump(2) + "\n";
  return emit(common, text);
}

int run_correction(const CommonOptions& common, const std::string& state, double R,
                   std::string prefix) {
  ContextHandle ctx;
  if (apply_common(ctx.ptr, common)) return 1;
  h2p_correction* correction = nullptr;
  if (h2p_correction_run(ctx.ptr, state.c_str(), R, &correction) != H2P_OK) {
    std::cerr << "error: " << h2p_context_last_error(ctx.ptr) << "\n";
    return 2;
  }
  std::unique_ptr<h2p_correction, decltype(&h2p_correction_destroy)> guard(
      correction, h2p_correction_destroy);

  if (prefix.empty()) prefix = "correction_" + state + "_R" + fmt12(R) + "_";
  const struct {
    h2p_profile which;
    const char* name;
  } profiles[] = {{H2P_PROFILE_X0, "X0"},
                  {H2P_PROFILE_PHI1, "phi1"},
                  {H2P_PROFILE_Y0, "Y0"},
                  {H2P_PROFILE_RHO1, "rho1"}};
  for (const auto& profile : profiles) {
    const std::string path = prefix + profile.name + ".dat";
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open '" << path << "' for writing\n";
      return 1;
    }
    const int n = h2p_correction_profile_size(correction, profile.which);
    for (int i = 0; i < n; ++i) {
      double node = 0, value = 0;
      h2p_correction_profile_point(correction, profile.which, i, &node, &value);
      out << fmt12(node) << " " << fmt12(value) << "\n";
    }
    std::cout << "wrote " << path << " (" << n << " rows)\n";
  }
  std::cout << "A1x " << fmt12(h2p_correction_a1x(correction)) << ", A1y "
            << fmt12(h2p_correction_a1y(correction)) << ", gap "
            << fmt12(h2p_correction_gap(correction)) << "\n";
  return 0;
}

int run_verify(const CommonOptions& common, bool quick) {
  ContextHandle ctx;
  if (apply_common(ctx.ptr, common)) return 1;
  h2p_verify_report* report = nullptr;
  if (h2p_verify_run(ctx.ptr, quick ? 1 : 0, &report) != H2P_OK) {
    std::cerr << "error: " << h2p_context_last_error(ctx.ptr) << "\n";
    return 2;
  }
  std::unique_ptr<h2p_verify_report, decltype(&h2p_verify_report_destroy)> guard(
      report, h2p_verify_report_destroy);
  for (int i = 0; i < h2p_verify_count(report); ++i) {
    std::printf("[%s] criterion %d: %s — %s\n",
                h2p_verify_passed(report, i) ? "PASS" : "FAIL", h2p_verify_id(report, i),
                h2p_verify_title(report, i), h2p_verify_detail(report, i));
  }
  const bool all = h2p_verify_all_passed(report) != 0;
  std::printf("%s\n", all ? "all criteria passed" : "SOME CRITERIA FAILED");
  return all ? 0 : 3;
}

std::string rebuild_echo(int argc, char** argv) {
  std::string echo;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) echo += " ";
    echo += argv[i];
  }
  return echo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"h2plus: eigenstates of the one-electron two-center molecular ion"};
  app.require_subcommand(1);

  const std::string echo = rebuild_echo(argc, argv);

  std::string state = "1ssg";
  double R = 2.0;
  std::vector<double> r_list;
  double r_min = 1.0, r_max = 10.0;
  int r_count = 10;
  bool with_oracle = false;
  bool quick = false;
  std::string prefix;

  CommonOptions solve_common, curve_common, osc_common, corr_common, verify_common;

  CLI::App* solve = app.add_subcommand("solve", "Solve one state at one distance");
  solve->add_option("--state", state, "State label (1ssg or 2psu)")->required();
  solve->add_option("--R", R, "Internuclear distance [Bohr]")->required();
  solve->add_flag("--verify", with_oracle, "Attach the shooting cross-check");
  add_common(solve, solve_common);

  CLI::App* curve = app.add_subcommand("curve", "Sweep a grid of distances");
  curve->add_option("--state", state, "State label (1ssg or 2psu)")->required();
  curve->add_option("--R-list", r_list, "Explicit comma-separated distances")->delimiter(',');
  curve->add_option("--R-min", r_min, "Grid start [Bohr]");
  curve->add_option("--R-max", r_max, "Grid end [Bohr]");
  curve->add_option("--R-count", r_count, "Grid size")->check(CLI::PositiveNumber);
  add_common(curve, curve_common);

  CLI::App* oscillator = app.add_subcommand("oscillator", "1ssg <-> 2psu transition strength");
  oscillator->add_option("--R", R, "Internuclear distance [Bohr]");
  oscillator->add_option("--R-list", r_list, "Explicit comma-separated distances")
      ->delimiter(',');
  oscillator->add_option("--R-min", r_min, "Grid start [Bohr]");
  oscillator->add_option("--R-max", r_max, "Grid end [Bohr]");
  oscillator->add_option("--R-count", r_count, "Grid size")->check(CLI::PositiveNumber);
  add_common(oscillator, osc_common);

  CLI::App* correction = app.add_subcommand(
      "correction", "First-order phase corrections as two-column plot data");
  correction->add_option("--state", state, "State label (1ssg or 2psu)")->required();
  correction->add_option("--R", R, "Internuclear distance [Bohr]")->required();
  correction->add_option("--out-prefix", prefix, "Filename prefix for the profile files");
  add_common(correction, corr_common);

  CLI::App* verify = app.add_subcommand("verify", "Run the acceptance checks");
  verify->add_flag("--quick", quick, "Restrict to the R = 2 subset");
  add_common(verify, verify_common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(echo, solve_common, state, R, with_oracle);
    if (curve->parsed()) {
      const std::vector<double> grid = build_grid(r_list, r_min, r_max, r_count);
      return run_curve(echo, curve_common, state, grid);
    }
    if (oscillator->parsed()) {
      std::vector<double> grid = r_list;
      if (grid.empty() && oscillator->count("--R-min")) grid = build_grid({}, r_min, r_max, r_count);
      if (grid.empty()) grid = {R};
      return run_oscillator(echo, osc_common, grid);
    }
    if (correction->parsed()) return run_correction(corr_common, state, R, prefix);
    if (verify->parsed()) return run_verify(verify_common, quick);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 1;
}
