/*
 * Copyright 2026 The h2plus developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the h2plus library: variational eigenstates of the
 * one-electron two-center ion, first-order phase corrections, an
 * independent shooting cross-check, and the 1ssg <-> 2psu transition
 * strength.
 *
 * Conventions: energies in Rydberg, lengths in Bohr.  State labels are the
 * ASCII names "1ssg" and "2psu".  All handles are opaque; every handle
 * returned through an out-parameter is owned by the caller and released
 * with the matching _destroy function (results returned by h2p_curve_at
 * stay owned by the curve).  A context is not to be shared across threads;
 * distinct contexts are independent.
 */

#ifndef H2PLUS_H2PLUS_H
#define H2PLUS_H2PLUS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum h2p_status {
  H2P_OK = 0,
  H2P_ERR_INVALID_ARGUMENT = 1,
  H2P_ERR_DOMAIN = 2,
  H2P_ERR_SINGULAR = 3,
  H2P_ERR_NO_CONVERGENCE = 4,
  H2P_ERR_QUADRATURE = 5,
  H2P_ERR_UNSUPPORTED_STATE = 6,
  H2P_ERR_IO = 7,
  H2P_ERR_INTERNAL = 8
} h2p_status;

typedef struct h2p_context h2p_context;
typedef struct h2p_result h2p_result;
typedef struct h2p_curve h2p_curve;
typedef struct h2p_transition h2p_transition;
typedef struct h2p_correction h2p_correction;
typedef struct h2p_oracle h2p_oracle;
typedef struct h2p_verify_report h2p_verify_report;

const char* h2p_version(void);
const char* h2p_status_name(h2p_status status);

/* ---- context ---------------------------------------------------------- */

h2p_context* h2p_context_create(void);
void h2p_context_destroy(h2p_context* context);

/* Message describing the most recent failure on this context. */
const char* h2p_context_last_error(const h2p_context* context);

/* Nodes per coordinate for every quadrature (default 200). */
h2p_status h2p_context_set_quadrature_order(h2p_context* context, int order);
/* Energy-evaluation budget per minimization (default 400000). */
h2p_status h2p_context_set_optimizer_budget(h2p_context* context, long budget);

/* ---- single solves ----------------------------------------------------- */

h2p_status h2p_solve(h2p_context* context, const char* state, double R, h2p_result** out);
/* Same, with a2 = b2 frozen at zero. */
h2p_status h2p_solve_reduced(h2p_context* context, const char* state, double R,
                             h2p_result** out);
/* Same, plus the shooting cross-check attached to the result. */
h2p_status h2p_solve_verified(h2p_context* context, const char* state, double R,
                              h2p_result** out);

void h2p_result_destroy(h2p_result* result);

double h2p_result_e_total(const h2p_result* result);      /* [Ry] */
double h2p_result_e_electronic(const h2p_result* result); /* E' = E - 2/R [Ry] */
double h2p_result_p(const h2p_result* result);
double h2p_result_a1x(const h2p_result* result);
double h2p_result_a1y(const h2p_result* result);
double h2p_result_consistency_gap(const h2p_result* result);
double h2p_result_R(const h2p_result* result);
const char* h2p_result_state(const h2p_result* result);

typedef enum h2p_param {
  H2P_PARAM_ALPHA = 0,
  H2P_PARAM_GAMMA = 1,
  H2P_PARAM_A1 = 2,
  H2P_PARAM_A2 = 3,
  H2P_PARAM_B2 = 4,
  H2P_PARAM_B3 = 5,
  H2P_PARAM_P = 6
} h2p_param;

double h2p_result_param(const h2p_result* result, h2p_param which);

long h2p_result_evaluations(const h2p_result* result);
int h2p_result_iterations(const h2p_result* result);
double h2p_result_quadrature_error(const h2p_result* result);

/* Oracle annex, present after h2p_solve_verified. */
int h2p_result_has_oracle(const h2p_result* result);
double h2p_result_oracle_e_total(const h2p_result* result);
double h2p_result_oracle_A(const h2p_result* result);
double h2p_result_oracle_abs_de(const h2p_result* result);

/* ---- curves ------------------------------------------------------------ */

/* R values must be sorted ascending.  Per-point failures are recorded, not
 * propagated; h2p_curve_point_error returns NULL for succeeded points. */
h2p_status h2p_curve_run(h2p_context* context, const char* state, const double* R_values,
                         int count, h2p_curve** out);
void h2p_curve_destroy(h2p_curve* curve);
int h2p_curve_size(const h2p_curve* curve);
double h2p_curve_R(const h2p_curve* curve, int index);
const h2p_result* h2p_curve_at(const h2p_curve* curve, int index); /* NULL if failed */
const char* h2p_curve_point_error(const h2p_curve* curve, int index);

/* ---- transition -------------------------------------------------------- */

h2p_status h2p_oscillator(h2p_context* context, double R, h2p_transition** out);
void h2p_transition_destroy(h2p_transition* transition);
double h2p_transition_R(const h2p_transition* transition);
double h2p_transition_e_g(const h2p_transition* transition);
double h2p_transition_e_u(const h2p_transition* transition);
double h2p_transition_delta_e(const h2p_transition* transition);
double h2p_transition_q_z(const h2p_transition* transition); /* [Bohr] */
double h2p_transition_f01(const h2p_transition* transition);

/* ---- corrections ------------------------------------------------------- */

h2p_status h2p_correction_run(h2p_context* context, const char* state, double R,
                              h2p_correction** out);
void h2p_correction_destroy(h2p_correction* correction);

double h2p_correction_a1x(const h2p_correction* correction);
double h2p_correction_a1y(const h2p_correction* correction);
double h2p_correction_gap(const h2p_correction* correction);

typedef enum h2p_profile {
  H2P_PROFILE_X0 = 0,   /* zero-order xi factor on the xi grid */
  H2P_PROFILE_PHI1 = 1, /* integrated xi phase correction */
  H2P_PROFILE_Y0 = 2,   /* zero-order eta factor on the eta grid */
  H2P_PROFILE_RHO1 = 3  /* integrated eta phase correction */
} h2p_profile;

int h2p_correction_profile_size(const h2p_correction* correction, h2p_profile which);
h2p_status h2p_correction_profile_point(const h2p_correction* correction, h2p_profile which,
                                        int index, double* node, double* value);

/* Corrected wavefunction at one prolate point; refuses points beyond the
 * stored profile grids. */
h2p_status h2p_correction_evaluate(const h2p_correction* correction, double xi, double eta,
                                   double* value);

/* Re-minimization over p with the corrections rebuilt at every sampled p:
 * relative change of the optimum and the energy change it brings. */
h2p_status h2p_correction_reoptimize_p(h2p_context* context, const h2p_correction* correction,
                                       double* p_shift_relative, double* energy_shift);

/* Largest relative pointwise deviation from the shooting solution
 * (corrected = 1 dresses the trial with the first-order phases). */
h2p_status h2p_pointwise_delta(h2p_context* context, const char* state, double R,
                               int corrected, double* delta);

/* ---- oracle ------------------------------------------------------------ */

h2p_status h2p_oracle_run(h2p_context* context, const char* state, double R, h2p_oracle** out);
void h2p_oracle_destroy(h2p_oracle* oracle);
double h2p_oracle_e_total(const h2p_oracle* oracle);
double h2p_oracle_p(const h2p_oracle* oracle);
double h2p_oracle_A(const h2p_oracle* oracle);
double h2p_oracle_residual_xi(const h2p_oracle* oracle);
double h2p_oracle_residual_eta(const h2p_oracle* oracle);

/* ---- acceptance verification ------------------------------------------ */

/* Runs the acceptance criteria (quick = 1 restricts to the R = 2 subset). */
h2p_status h2p_verify_run(h2p_context* context, int quick, h2p_verify_report** out);
void h2p_verify_report_destroy(h2p_verify_report* report);
int h2p_verify_count(const h2p_verify_report* report);
int h2p_verify_passed(const h2p_verify_report* report, int index);
int h2p_verify_id(const h2p_verify_report* report, int index);
const char* h2p_verify_title(const h2p_verify_report* report, int index);
const char* h2p_verify_detail(const h2p_verify_report* report, int index);
int h2p_verify_all_passed(const h2p_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* H2PLUS_H2PLUS_H */
