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

#include "h2plus/h2plus.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <string>

#include "driver.hpp"
#include "verify.hpp"

#ifndef H2P_VERSION_STRING
#define H2P_VERSION_STRING "0.0.0"
#endif

// Opaque handle definitions: each wraps the corresponding core object.
struct h2p_context {
  h2p::Context core;
  std::string last_error;
};

struct h2p_result {
  h2p::SolveResult core;
  bool has_oracle = false;
  double oracle_e_total = 0.0;
  double oracle_A = 0.0;
};

struct h2p_curve {
  std::vector<h2p::CurvePoint> points;
  std::vector<h2p_result> wrapped;  // parallel to points, valid where result present
};

struct h2p_transition {
  h2p::TransitionResult core;
};

struct h2p_correction {
  h2p::SolveResult solved;
  h2p::CorrectedWavefunction wavefunction;
  std::vector<double> x0_values;
  std::vector<double> y0_values;
};

struct h2p_oracle {
  h2p::ShootResult core;
};

struct h2p_verify_report {
  std::vector<h2p::CriterionResult> criteria;
};

namespace {

h2p_status classify(const std::exception& error) {
  if (dynamic_cast<const h2p::usage_error*>(&error)) return H2P_ERR_INVALID_ARGUMENT;
  if (dynamic_cast<const h2p::domain_error*>(&error)) return H2P_ERR_DOMAIN;
  if (dynamic_cast<const h2p::singular_error*>(&error)) return H2P_ERR_SINGULAR;
  if (dynamic_cast<const h2p::quadrature_error*>(&error)) return H2P_ERR_QUADRATURE;
  if (dynamic_cast<const h2p::convergence_error*>(&error)) return H2P_ERR_NO_CONVERGENCE;
  return H2P_ERR_INTERNAL;
}

template <class Body>
h2p_status guarded(h2p_context* context, const Body& body) {
  if (!context) return H2P_ERR_INVALID_ARGUMENT;
  try {
    return body();
  } catch (const std::exception& error) {
    context->last_error = error.what();
    return classify(error);
  } catch (...) {
    context->last_error = "unknown error";
    return H2P_ERR_INTERNAL;
  }
}

h2p_status parse_state(h2p_context* context, const char* name, h2p::StateLabel& out) {
  if (!name) {
    context->last_error = "state label is null";
    return H2P_ERR_INVALID_ARGUMENT;
  }
  const auto parsed = h2p::StateLabel::parse(name);
  if (!parsed || !parsed->solver_supported()) {
    context->last_error = std::string("unsupported state label '") + name +
                          "' (expected 1ssg or 2psu)";
    return H2P_ERR_UNSUPPORTED_STATE;
  }
  out = *parsed;
  return H2P_OK;
}

}  // namespace

extern "C" {

const char* h2p_version(void) { return H2P_VERSION_STRING; }

const char* h2p_status_name(h2p_status status) {
  switch (status) {
    case H2P_OK: return "ok";
    case H2P_ERR_INVALID_ARGUMENT: return "invalid argument";
    case H2P_ERR_DOMAIN: return "domain error";
    case H2P_ERR_SINGULAR: return "singular parameter";
    case H2P_ERR_NO_CONVERGENCE: return "no convergence";
    case H2P_ERR_QUADRATURE: return "quadrature error";
    case H2P_ERR_UNSUPPORTED_STATE: return "unsupported state";
    case H2P_ERR_IO: return "i/o error";
    case H2P_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

h2p_context* h2p_context_create(void) {
  try {
    return new h2p_context();
  } catch (...) {
    return nullptr;
  }
}

void h2p_context_destroy(h2p_context* context) { delete context; }

const char* h2p_context_last_error(const h2p_context* context) {
  return context ? context->last_error.c_str() : "null context";
}

h2p_status h2p_context_set_quadrature_order(h2p_context* context, int order) {
  return guarded(context, [&]() {
    if (order < 8 || order > 4000) {
      context->last_error = "quadrature order must lie in [8, 4000]";
      return H2P_ERR_INVALID_ARGUMENT;
    }
    context->core.options.quadrature_order = order;
    context->core.clear();
    return H2P_OK;
  });
}

h2p_status h2p_context_set_optimizer_budget(h2p_context* context, long budget) {
  return guarded(context, [&]() {
    if (budget < 1000) {
      context->last_error = "optimizer budget must be at least 1000";
      return H2P_ERR_INVALID_ARGUMENT;
    }
    context->core.options.max_evaluations = budget;
    context->core.clear();
    return H2P_OK;
  });
}

static h2p_status solve_impl(h2p_context* context, const char* state, double R,
                             bool reduced, bool verified, h2p_result** out) {
  if (out) *out = nullptr;
  return guarded(context, [&]() {
    if (!out) {
      context->last_error = "output pointer is null";
      return H2P_ERR_INVALID_ARGUMENT;
    }
    h2p::StateLabel label;
    const h2p_status parsed = parse_state(context, state, label);
    if (parsed != H2P_OK) return parsed;
    auto result = std::make_unique<h2p_result>();
    result->core = reduced ? context->core.solve_reduced(label, R)
                           : context->core.solve(label, R);
    if (verified) {
      const h2p::ShootResult& oracle = context->core.solve_oracle(label, R);
      result->has_oracle = true;
      result->oracle_e_total = oracle.e_total;
      result->oracle_A = oracle.A;
    }
    *out = result.release();
    return H2P_OK;
  });
}

h2p_status h2p_solve(h2p_context* context, const char* state, double R, h2p_result** out) {
  return solve_impl(context, state, R, false, false, out);
}

h2p_status h2p_solve_reduced(h2p_context* context, const char* state, double R,
                             h2p_result** out) {
  return solve_impl(context, state, R, true, false, out);
}

h2p_status h2p_solve_verified(h2p_context* context, const char* state, double R,
                              h2p_result** out) {
  return solve_impl(context, state, R, false, true, out);
}

void h2p_result_destroy(h2p_result* result) { delete result; }

double h2p_result_e_total(const h2p_result* result) { return result->core.e_total; }
double h2p_result_e_electronic(const h2p_result* result) { return result->core.e_prime; }
double h2p_result_p(const h2p_result* result) { return result->core.p_opt; }
double h2p_result_a1x(const h2p_result* result) { return result->core.a1x; }
double h2p_result_a1y(const h2p_result* result) { return result->core.a1y; }
double h2p_result_consistency_gap(const h2p_result* result) {
  return std::abs(result->core.a1x - result->core.a1y);
}
double h2p_result_R(const h2p_result* result) { return result->core.R; }

const char* h2p_result_state(const h2p_result* result) {
  static thread_local std::string name;
  name = result->core.state.name();
  return name.c_str();
}

double h2p_result_param(const h2p_result* result, h2p_param which) {
  const h2p::TrialParams& params = result->core.params;
  switch (which) {
    case H2P_PARAM_ALPHA: return params.alpha;
    case H2P_PARAM_GAMMA: return params.gamma;
    case H2P_PARAM_A1: return params.a1;
    case H2P_PARAM_A2: return params.a2;
    case H2P_PARAM_B2: return params.b2;
    case H2P_PARAM_B3: return params.b3;
    case H2P_PARAM_P: return params.p;
  }
  return std::nan("");
}

long h2p_result_evaluations(const h2p_result* result) {
  return result->core.diagnostics.evaluations;
}
int h2p_result_iterations(const h2p_result* result) {
  return result->core.diagnostics.iterations;
}
double h2p_result_quadrature_error(const h2p_result* result) {
  return result->core.diagnostics.quadrature_error;
}

int h2p_result_has_oracle(const h2p_result* result) { return result->has_oracle ? 1 : 0; }
double h2p_result_oracle_e_total(const h2p_result* result) { return result->oracle_e_total; }
double h2p_result_oracle_A(const h2p_result* result) { return result->oracle_A; }
double h2p_result_oracle_abs_de(const h2p_result* result) {
  return std::abs(result->oracle_e_total - result->core.e_total);
}

h2p_status h2p_curve_run(h2p_context* context, const char* state, const double* R_values,
                         int count, h2p_curve** out) {
  if (out) *out = nullptr;
  return guarded(context, [&]() {
    if (!out || !R_values || count < 1) {
      context->last_error = "curve requires a non-empty grid and an output pointer";
      return H2P_ERR_INVALID_ARGUMENT;
    }
    h2p::StateLabel label;
    const h2p_status parsed = parse_state(context, state, label);
    if (parsed != H2P_OK) return parsed;
    auto curve = std::make_unique<h2p_curve>();
    curve->points =
        context->core.solve_curve(std::vector<double>(R_values, R_values + count), label);
    curve->wrapped.resize(curve->points.size());
    for (std::size_t i = 0; i < curve->points.size(); ++i)
      if (curve->points[i].result) curve->wrapped[i].core = *curve->points[i].result;
    *out = curve.release();
    return H2P_OK;
  });
}

void h2p_curve_destroy(h2p_curve* curve) { delete curve; }
int h2p_curve_size(const h2p_curve* curve) { return static_cast<int>(curve->points.size()); }
double h2p_curve_R(const h2p_curve* curve, int index) { return curve->points[index].R; }

const h2p_result* h2p_curve_at(const h2p_curve* curve, int index) {
  if (index < 0 || index >= static_cast<int>(curve->points.size())) return nullptr;
  return curve->points[index].result ? &curve->wrapped[index] : nullptr;
}

const char* h2p_curve_point_error(const h2p_curve* curve, int index) {
  if (index < 0 || index >= static_cast<int>(curve->points.size())) return "index out of range";
  return curve->points[index].result ? nullptr : curve->points[index].error.c_str();
}

h2p_status h2p_oscillator(h2p_context* context, double R, h2p_transition** out) {
  if (out) *out = nullptr;
  return guarded(context, [&]() {
    if (!out) {
      context->last_error = "output pointer is null";
      return H2P_ERR_INVALID_ARGUMENT;
    }
    auto transition = std::make_unique<h2p_transition>();
    transition->core = context->core.oscillator(R);
    *out = transition.release();
    return H2P_OK;
  });
}

void h2p_transition_destroy(h2p_transition* transition) { delete transition; }
double h2p_transition_R(const h2p_transition* t) { return t->core.R; }
double h2p_transition_e_g(const h2p_transition* t) { return t->core.e_g; }
double h2p_transition_e_u(const h2p_transition* t) { return t->core.e_u; }
double h2p_transition_delta_e(const h2p_transition* t) { return t->core.delta_e; }
double h2p_transition_q_z(const h2p_transition* t) { return t->core.q_z; }
double h2p_transition_f01(const h2p_transition* t) { return t->core.f01; }

h2p_status h2p_correction_run(h2p_context* context, const char* state, double R,
                              h2p_correction** out) {
  if (out) *out = nullptr;
  return guarded(context, [&]() {
    if (!out) {
      context->last_error = "output pointer is null";
      return H2P_ERR_INVALID_ARGUMENT;
    }
    h2p::StateLabel label;
    const h2p_status parsed = parse_state(context, state, label);
    if (parsed != H2P_OK) return parsed;
    const h2p::SolveResult& solved = context->core.solve(label, R);
    const int order = std::max(context->core.options.quadrature_order, 200);
    auto correction = std::make_unique<h2p_correction>(
        h2p_correction{solved, h2p::build_corrected(solved, order), {}, {}});
    const auto& xi_nodes = correction->wavefunction.xi_profile().nodes;
    correction->x0_values.reserve(xi_nodes.size());
    for (const double xi : xi_nodes)
      correction->x0_values.push_back(h2p::eval_X0(solved.params, xi));
    const auto& eta_nodes = correction->wavefunction.eta_profile().nodes;
    correction->y0_values.reserve(eta_nodes.size());
    for (const double eta : eta_nodes)
      correction->y0_values.push_back(h2p::eval_Y0(solved.params, eta));
    *out = correction.release();
    return H2P_OK;
  });
}

void h2p_correction_destroy(h2p_correction* correction) { delete correction; }
double h2p_correction_a1x(const h2p_correction* c) { return c->solved.a1x; }
double h2p_correction_a1y(const h2p_correction* c) { return c->solved.a1y; }
double h2p_correction_gap(const h2p_correction* c) {
  return std::abs(c->solved.a1x - c->solved.a1y);
}

int h2p_correction_profile_size(const h2p_correction* c, h2p_profile which) {
  switch (which) {
    case H2P_PROFILE_X0:
    case H2P_PROFILE_PHI1:
      return static_cast<int>(c->wavefunction.xi_profile().nodes.size());
    case H2P_PROFILE_Y0:
    case H2P_PROFILE_RHO1:
      return static_cast<int>(c->wavefunction.eta_profile().nodes.size());
  }
  return 0;
}

h2p_status h2p_correction_profile_point(const h2p_correction* c, h2p_profile which, int index,
                                        double* node, double* value) {
  if (!c || !node || !value) return H2P_ERR_INVALID_ARGUMENT;
  if (index < 0 || index >= h2p_correction_profile_size(c, which))
    return H2P_ERR_INVALID_ARGUMENT;
  switch (which) {
    case H2P_PROFILE_X0:
      *node = c->wavefunction.xi_profile().nodes[index];
      *value = c->x0_values[index];
      return H2P_OK;
    case H2P_PROFILE_PHI1:
      *node = c->wavefunction.xi_profile().nodes[index];
      *value = c->wavefunction.xi_profile().phase[index];
      return H2P_OK;
    case H2P_PROFILE_Y0:
      *node = c->wavefunction.eta_profile().nodes[index];
      *value = c->y0_values[index];
      return H2P_OK;
    case H2P_PROFILE_RHO1:
      *node = c->wavefunction.eta_profile().nodes[index];
      *value = c->wavefunction.eta_profile().phase[index];
      return H2P_OK;
  }
  return H2P_ERR_INVALID_ARGUMENT;
}

h2p_status h2p_correction_evaluate(const h2p_correction* c, double xi, double eta,
                                   double* value) {
  if (!c || !value) return H2P_ERR_INVALID_ARGUMENT;
  try {
    *value = c->wavefunction.evaluate({xi, eta, 0.0});
    return H2P_OK;
  } catch (const h2p::domain_error&) {
    return H2P_ERR_DOMAIN;
  } catch (...) {
    return H2P_ERR_INTERNAL;
  }
}

h2p_status h2p_correction_reoptimize_p(h2p_context* context, const h2p_correction* correction,
                                       double* p_shift_relative, double* energy_shift) {
  return guarded(context, [&]() {
    if (!correction || !p_shift_relative || !energy_shift) {
      context->last_error = "null argument";
      return H2P_ERR_INVALID_ARGUMENT;
    }
    const h2p::PReoptimizeResult reopt = h2p::reoptimize_p(
        correction->solved, std::max(context->core.options.quadrature_order, 160));
    *p_shift_relative = reopt.relative_shift;
    *energy_shift = reopt.energy_shift;
    return H2P_OK;
  });
}

h2p_status h2p_pointwise_delta(h2p_context* context, const char* state, double R,
                               int corrected, double* delta) {
  return guarded(context, [&]() {
    if (!delta) {
      context->last_error = "output pointer is null";
      return H2P_ERR_INVALID_ARGUMENT;
    }
    h2p::StateLabel label;
    const h2p_status parsed = parse_state(context, state, label);
    if (parsed != H2P_OK) return parsed;
    const h2p::SolveResult& solved = context->core.solve(label, R);
    const h2p::ShootResult& oracle = context->core.solve_oracle(label, R);
    if (corrected) {
      const h2p::CorrectedWavefunction wavefunction =
          h2p::build_corrected(solved, std::max(context->core.options.quadrature_order, 200));
      *delta = h2p::pointwise_delta(
          [&](double xi, double eta) {
            return wavefunction.X_clamped(xi) * wavefunction.Y_clamped(eta);
          },
          oracle);
    } else {
      *delta = h2p::pointwise_delta(
          [&](double xi, double eta) {
            return h2p::eval_X0(solved.params, xi) * h2p::eval_Y0(solved.params, eta);
          },
          oracle);
    }
    return H2P_OK;
  });
}

h2p_status h2p_oracle_run(h2p_context* context, const char* state, double R, h2p_oracle** out) {
  if (out) *out = nullptr;
  return guarded(context, [&]() {
    if (!out) {
      context->last_error = "output pointer is null";
      return H2P_ERR_INVALID_ARGUMENT;
    }
    h2p::StateLabel label;
    const h2p_status parsed = parse_state(context, state, label);
    if (parsed != H2P_OK) return parsed;
    auto oracle = std::make_unique<h2p_oracle>();
    oracle->core = context->core.solve_oracle(label, R);
    *out = oracle.release();
    return H2P_OK;
  });
}

void h2p_oracle_destroy(h2p_oracle* oracle) { delete oracle; }
double h2p_oracle_e_total(const h2p_oracle* oracle) { return oracle->core.e_total; }
double h2p_oracle_p(const h2p_oracle* oracle) { return oracle->core.p; }
double h2p_oracle_A(const h2p_oracle* oracle) { return oracle->core.A; }
double h2p_oracle_residual_xi(const h2p_oracle* oracle) { return oracle->core.residual_xi; }
double h2p_oracle_residual_eta(const h2p_oracle* oracle) { return oracle->core.residual_eta; }

h2p_status h2p_verify_run(h2p_context* context, int quick, h2p_verify_report** out) {
  if (out) *out = nullptr;
  return guarded(context, [&]() {
    if (!out) {
      context->last_error = "output pointer is null";
      return H2P_ERR_INVALID_ARGUMENT;
    }
    auto report = std::make_unique<h2p_verify_report>();
    h2p::VerifyOptions verify_options;
    verify_options.quick = quick != 0;
    report->criteria = h2p::run_acceptance(context->core, verify_options);
    *out = report.release();
    return H2P_OK;
  });
}

void h2p_verify_report_destroy(h2p_verify_report* report) { delete report; }
int h2p_verify_count(const h2p_verify_report* report) {
  return static_cast<int>(report->criteria.size());
}
int h2p_verify_passed(const h2p_verify_report* report, int index) {
  return report->criteria[index].passed ? 1 : 0;
}
int h2p_verify_id(const h2p_verify_report* report, int index) {
  return report->criteria[index].id;
}
const char* h2p_verify_title(const h2p_verify_report* report, int index) {
  return report->criteria[index].title.c_str();
}
const char* h2p_verify_detail(const h2p_verify_report* report, int index) {
  return report->criteria[index].detail.c_str();
}
int h2p_verify_all_passed(const h2p_verify_report* report) {
  for (const h2p::CriterionResult& criterion : report->criteria)
    if (!criterion.passed) return 0;
  return 1;
}

}  // extern "C"
