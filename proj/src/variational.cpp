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

#include "variational.hpp"

#include <algorithm>
#include <cmath>

#include "optimize.hpp"
#include "presets.hpp"

namespace h2p {
namespace {

struct XiSums {
  double n = 0, s = 0, m = 0, k = 0;
};

// One pass over the mapped grid accumulating all four xi moments; fixed node
// order with extended precision keeps results bit-reproducible.
XiSums xi_moment_pass(const TrialParams& params, const QuadratureRule& rule) {
  long double n = 0, s = 0, m = 0, k = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double xi = rule.nodes[i];
    const XiParts parts = eval_xi_parts(params, xi);
    const double w = rule.weights[i];
    const double x2 = parts.value * parts.value;
    const double d2 = parts.derivative * parts.derivative;
    if (!std::isfinite(x2) || !std::isfinite(d2))
      throw quadrature_error("non-finite xi integrand", xi);
    n += static_cast<long double>(w) * x2;
    m += static_cast<long double>(w) * xi * x2;
    s += static_cast<long double>(w) * xi * xi * x2;
    k += static_cast<long double>(w) * (xi * xi - 1.0) * d2;
  }
  return {static_cast<double>(n), static_cast<double>(s), static_cast<double>(m),
          static_cast<double>(k)};
}

struct EtaSums {
  double n = 0, s = 0, k = 0;
};

EtaSums eta_moment_pass(const TrialParams& params, const QuadratureRule& rule) {
  long double n = 0, s = 0, k = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double eta = rule.nodes[i];
    const EtaParts parts = eval_eta_parts(params, eta);
    const double w = rule.weights[i];
    const double y2 = parts.value * parts.value;
    const double d2 = parts.derivative * parts.derivative;
    if (!std::isfinite(y2) || !std::isfinite(d2))
      throw quadrature_error("non-finite eta integrand", eta);
    n += static_cast<long double>(w) * y2;
    s += static_cast<long double>(w) * eta * eta * y2;
    k += static_cast<long double>(w) * (1.0 - eta * eta) * d2;
  }
  return {static_cast<double>(n), static_cast<double>(s), static_cast<double>(k)};
}

double xi_map_scale(double p) { return 1.0 / std::clamp(p, 1e-3, 1e3); }

}  // namespace

double MomentBundle::max_relative_error() const {
  double worst = 0.0;
  for (const IntegralResult* r : {&n_xi, &s_xi, &m_xi, &k_xi, &n_eta, &s_eta, &k_eta}) {
    const double denom = std::max(std::abs(r->value), 1e-300);
    worst = std::max(worst, r->error_estimate / denom);
  }
  return worst;
}

MomentBundle compute_moments(const TrialParams& params, int order) {
  params.validate();
  const QuadratureRule xi_rule = semi_infinite_rule(order, xi_map_scale(params.p));
  const QuadratureRule xi_fine = refined_rule(xi_rule);
  const QuadratureRule eta_rule = gauss_rule(order);
  const QuadratureRule eta_fine = refined_rule(eta_rule);

  const XiSums xa = xi_moment_pass(params, xi_rule);
  const XiSums xb = xi_moment_pass(params, xi_fine);
  const EtaSums ea = eta_moment_pass(params, eta_rule);
  const EtaSums eb = eta_moment_pass(params, eta_fine);

  MomentBundle bundle;
  bundle.n_xi = {xb.n, std::abs(xb.n - xa.n)};
  bundle.s_xi = {xb.s, std::abs(xb.s - xa.s)};
  bundle.m_xi = {xb.m, std::abs(xb.m - xa.m)};
  bundle.k_xi = {xb.k, std::abs(xb.k - xa.k)};
  bundle.n_eta = {eb.n, std::abs(eb.n - ea.n)};
  bundle.s_eta = {eb.s, std::abs(eb.s - ea.s)};
  bundle.k_eta = {eb.k, std::abs(eb.k - ea.k)};
  return bundle;
}

EnergyResult energy_expectation(const TrialParams& params, const Geometry& geometry, int order) {
  geometry.validate();
  if (params.R != geometry.R) throw usage_error("energy_expectation: R mismatch");
  const MomentBundle b = compute_moments(params, order);
  const double R = geometry.R;

  const double norm = b.s_xi.value * b.n_eta.value - b.n_xi.value * b.s_eta.value;
  if (!(norm > 0.0)) throw domain_error("energy_expectation: non-positive norm");

  const double kinetic =
      4.0 / (R * R) * (b.k_xi.value * b.n_eta.value + b.n_xi.value * b.k_eta.value);
  const double coulomb = -8.0 / R * b.m_xi.value * b.n_eta.value;

  EnergyResult result;
  result.norm = norm;
  result.e_prime = (kinetic + coulomb) / norm;
  result.quadrature_error = b.max_relative_error();
  return result;
}

namespace {

constexpr double kInfeasiblePenalty = 1e100;

struct Packing {
  bool reduced;
  int size() const { return reduced ? 5 : 7; }

  std::vector<double> pack(const TrialParams& params) const {
    if (reduced) return {params.alpha, params.gamma, params.a1, params.b3, params.p};
    return {params.alpha, params.gamma, params.a1, params.a2, params.b2, params.b3, params.p};
  }

  TrialParams unpack(const std::vector<double>& x, const TrialParams& base) const {
    TrialParams params = base;
    if (reduced) {
      params.alpha = x[0];
      params.gamma = x[1];
      params.a1 = x[2];
      params.a2 = 0.0;
      params.b2 = 0.0;
      params.b3 = x[3];
      params.p = x[4];
    } else {
      params.alpha = x[0];
      params.gamma = x[1];
      params.a1 = x[2];
      params.a2 = x[3];
      params.b2 = x[4];
      params.b3 = x[5];
      params.p = x[6];
    }
    return params;
  }

  int p_index() const { return reduced ? 4 : 6; }
};

std::vector<double> relative_steps(const std::vector<double>& x, double fraction, double floor) {
  std::vector<double> steps(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    steps[i] = fraction * std::max(std::abs(x[i]), floor);
  return steps;
}

}  // namespace

SolveResult minimize(const Geometry& geometry, const StateLabel& state, const TrialParams& init,
                     const SolveOptions& options) {
  geometry.validate();
  if (!state.solver_supported())
    throw usage_error("minimize: unsupported state label " + state.name());

  const Packing packing{options.reduced};
  TrialParams base = init;
  base.state = state;
  base.R = geometry.R;
  if (options.reduced) {
    base.a2 = 0.0;
    base.b2 = 0.0;
  }
  if (!base.feasible()) throw domain_error("minimize: infeasible initial parameters");

  long evaluations = 0;
  const Objective objective = [&](const std::vector<double>& x) {
    ++evaluations;
    const TrialParams params = packing.unpack(x, base);
    if (!params.feasible()) return kInfeasiblePenalty;
    try {
      return energy_expectation(params, geometry, options.quadrature_order).e_prime;
    } catch (const std::exception&) {
      return kInfeasiblePenalty;
    }
  };

  MinimizeControl control;
  control.max_evaluations = options.max_evaluations;

  std::vector<double> x = packing.pack(base);
  int iterations = 0;

  // gamma sits in the flattest, most curved trough of the functional; the
  // helpers below let whole stages run with it frozen
  const int gi = 1;  // gamma slot in the packing
  const auto sub_objective = [&](double gamma_value) {
    return [&objective, gamma_value, gi](const std::vector<double>& xs) {
      std::vector<double> full(xs.size() + 1);
      for (std::size_t k = 0, j = 0; k < full.size(); ++k)
        full[k] = (static_cast<int>(k) == gi) ? gamma_value : xs[j++];
      return objective(full);
    };
  };
  const auto strip = [&](const std::vector<double>& full) {
    std::vector<double> xs;
    for (std::size_t k = 0; k < full.size(); ++k)
      if (static_cast<int>(k) != gi) xs.push_back(full[k]);
    return xs;
  };
  const auto embed = [&](const std::vector<double>& xs, double gamma_value) {
    std::vector<double> full(xs.size() + 1);
    for (std::size_t k = 0, j = 0; k < full.size(); ++k)
      full[k] = (static_cast<int>(k) == gi) ? gamma_value : xs[j++];
    return full;
  };

  // Stages 1-2: simplex, then alternating coordinate and quadratic-model
  // refinement until the energy stops moving.  The model step handles the
  // strongly correlated directions the axis sweeps cannot follow; the
  // restarts unstick the model step from its own truncation bias.  Cold
  // starts explore the full space; warm sweep points keep gamma frozen here
  // so the walk cannot slide along the degenerate trough and hop branches
  // between neighboring grid points.
  double f_best;
  {
    const bool frozen_gamma = !options.branch_scan;
    const double gamma_now = x[gi];
    std::vector<double> y = frozen_gamma ? strip(x) : x;
    const Objective stage_objective =
        frozen_gamma ? Objective(sub_objective(gamma_now)) : objective;

    MinimizeState stage = nelder_mead(
        stage_objective, y, relative_steps(y, options.branch_scan ? 0.04 : 0.01, 1e-3),
        control);
    y = stage.x;
    f_best = stage.f;
    iterations += stage.iterations;

    const int max_cycles = options.branch_scan ? 16 : 3;
    for (int cycle = 0; cycle < max_cycles; ++cycle) {
      const std::vector<double> y_cycle_start = y;
      if (cycle > 0) {
        MinimizeControl nm_control = control;
        nm_control.max_evaluations =
            std::min<long>(evaluations + 3000, control.max_evaluations);
        stage = nelder_mead(stage_objective, y, relative_steps(y, 2e-3, 1e-5), nm_control);
        if (stage.f <= f_best) y = stage.x;
        iterations += stage.iterations;
      }
      stage = coordinate_polish(stage_objective, y, relative_steps(y, 1e-3, 1e-5), 6, control);
      y = stage.x;
      iterations += stage.iterations;
      stage =
          quadratic_model_polish(stage_objective, y, relative_steps(y, 4e-4, 1e-6), 6, control);
      y = stage.x;
      double f_cycle = stage.f;
      iterations += stage.iterations;

      // extrapolate along the net displacement of the whole cycle; this is
      // what actually travels down the curved valley on cold starts
      std::vector<double> drift(y.size());
      double drift_norm = 0.0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        drift[i] = y[i] - y_cycle_start[i];
        drift_norm = std::max(drift_norm, std::abs(drift[i]) / std::max(1.0, std::abs(y[i])));
      }
      if (drift_norm > 1e-13) {
        stage = line_search(stage_objective, y, f_cycle, drift, control);
        y = stage.x;
        f_cycle = stage.f;
      }

      const double improvement = f_best - f_cycle;
      f_best = f_cycle;
      if (improvement < 3e-14 && cycle > 0) break;
      if (evaluations >= options.max_evaluations) break;
    }
    x = frozen_gamma ? embed(y, gamma_now) : y;
  }

  // Stage 2.5: walk the parabola of the gamma profile (everything else
  // minimized at frozen gamma).  Warm-started sweep points keep the walk
  // local and clamped so the parameter path stays on the seed's branch.
  {
    std::vector<double> rest_best = strip(x);
    double gamma_best = x[gi];
    const auto profile = [&](double gamma_value, std::vector<double> rest) {
      const Objective sub = sub_objective(gamma_value);
      MinimizeState st;
      for (int cyc = 0; cyc < 2; ++cyc) {
        const std::vector<double> before = rest;
        st = coordinate_polish(sub, rest, relative_steps(rest, 1e-3, 1e-5), 5, control);
        rest = st.x;
        st = quadratic_model_polish(sub, rest, relative_steps(rest, 3e-4, 1e-6), 4, control);
        rest = st.x;
        std::vector<double> drift(rest.size());
        for (std::size_t i = 0; i < rest.size(); ++i) drift[i] = rest[i] - before[i];
        st = line_search(sub, rest, st.f, drift, control);
        rest = st.x;
      }
      return std::make_pair(st.f, rest);
    };

    // The profile in gamma can carry more than one local dip; scan a fixed
    // bracket of candidates before refining parabolically around the winner.
    const double gamma_seed = gamma_best;
    const double clamp_radius = options.branch_scan ? 1e9 : 0.08;
    std::vector<double> gammas = {gamma_best};
    std::vector<double> profile_values = {f_best};
    const auto try_gamma = [&](double candidate) {
      if (!(candidate > -0.9)) return;
      if (std::abs(candidate - gamma_seed) > clamp_radius) return;
      for (double g : gammas)
        if (std::abs(candidate - g) < 1e-7 * std::max(1.0, std::abs(g))) return;
      const auto [f_candidate, rest_candidate] = profile(candidate, rest_best);
      gammas.push_back(candidate);
      profile_values.push_back(f_candidate);
      if (f_candidate < f_best) {
        f_best = f_candidate;
        gamma_best = candidate;
        rest_best = rest_candidate;
      }
    };
    if (options.branch_scan) {
      for (double candidate : {0.45, 0.65, 0.9, 1.15}) {
        try_gamma(candidate);
        if (evaluations >= options.max_evaluations) break;
      }
    }
    const double span =
        options.branch_scan ? 0.12 * std::max(0.4, std::abs(gamma_best)) : 0.04;
    try_gamma(gamma_best - span);
    try_gamma(gamma_best + span);
    for (int round = 0; round < 4; ++round) {
      // refine with the three closest samples around the current winner
      std::vector<std::pair<double, double>> near;
      for (std::size_t i = 0; i < gammas.size(); ++i) near.push_back({gammas[i], profile_values[i]});
      std::sort(near.begin(), near.end(), [&](auto& a, auto& b) {
        return std::abs(a.first - gamma_best) < std::abs(b.first - gamma_best);
      });
      std::vector<double> gs, fv;
      for (std::size_t i = 0; i < near.size() && i < 4; ++i) {
        gs.push_back(near[i].first);
        fv.push_back(near[i].second);
      }
      const double vertex = parabola_vertex(gs, fv, gamma_best);
      const double before = f_best;
      try_gamma(vertex);
      if (f_best >= before - 1e-14) break;
      if (evaluations >= options.max_evaluations) break;
    }
    // re-polish at the winning gamma, now free again
    x = embed(rest_best, gamma_best);
    MinimizeState repolish =
        quadratic_model_polish(objective, x, relative_steps(x, 2e-4, 1e-6), 4, control);
    x = repolish.x;
    f_best = repolish.f;
  }

  // Stage 2.75: the Hessian of this family is severely ill-conditioned; walk
  // the softest eigendirections explicitly to drain what Newton steps on the
  // noisy gradient cannot see.
  {
    MinimizeState softened =
        soft_mode_polish(objective, x, relative_steps(x, 2e-4, 1e-6), 3, control);
    x = softened.x;
    f_best = softened.f;
    iterations += softened.iterations;
  }

  // Stage 3: align p with the energy it implies and re-polish the remaining
  // parameters until the pair stops moving.
  bool converged = false;
  for (int cycle = 0; cycle < 8; ++cycle) {
    const double e_prime = objective(x);
    if (!(e_prime < 0.0)) break;
    const double p_new = p_from_electronic_energy(e_prime, geometry.R);
    const double p_shift = std::abs(p_new - x[packing.p_index()]) / p_new;
    x[packing.p_index()] = p_new;

    std::vector<double> h = relative_steps(x, 2e-4, 1e-6);
    h[packing.p_index()] = 0.0;  // frozen during the re-polish
    MinimizeState polish = coordinate_polish(objective, x, h, 4, control);
    x = polish.x;
    std::vector<double> hq = relative_steps(x, 2e-4, 1e-6);
    hq[packing.p_index()] = 0.0;
    polish = quadratic_model_polish(objective, x, hq, 3, control);
    x = polish.x;
    ++iterations;

    const double improvement = f_best - polish.f;
    f_best = polish.f;
    if (p_shift < 1e-11 && std::abs(improvement) < 1e-12) {
      converged = true;
      break;
    }
    if (evaluations >= options.max_evaluations) break;
  }

  if (!converged && evaluations >= options.max_evaluations) {
    const TrialParams best = packing.unpack(x, base);
    throw convergence_error("minimize: evaluation budget exhausted at E' = " +
                            std::to_string(f_best) + " Ry, R = " + std::to_string(geometry.R) +
                            ", state " + best.state.name());
  }

  SolveResult result;
  result.state = state;
  result.R = geometry.R;
  result.params = packing.unpack(x, base);
  const EnergyResult energy = energy_expectation(result.params, geometry, options.quadrature_order);
  result.e_prime = energy.e_prime;
  result.e_total = energy.e_prime + 2.0 / geometry.R;
  result.p_opt = result.params.p;
  result.diagnostics.iterations = iterations;
  result.diagnostics.evaluations = evaluations;
  result.diagnostics.quadrature_error = energy.quadrature_error;
  result.diagnostics.converged = converged;
  return result;
}

std::vector<CurvePoint> curve(const std::vector<double>& grid, const StateLabel& state,
                              const TrialParams& first_init, const SolveOptions& options) {
  if (grid.empty()) throw usage_error("curve: empty grid");
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw usage_error("curve: grid must be sorted ascending");

  std::vector<CurvePoint> points;
  points.reserve(grid.size());
  TrialParams warm = first_init;
  bool chain_started = false;
  for (const double R : grid) {
    CurvePoint point;
    point.R = R;
    try {
      const TrialParams init = rescale_params(warm, R);
      // warm-started points inherit the branch of the previous point; the
      // candidate sweep would only invite hopping between near-degenerate
      // parameter troughs
      SolveOptions point_options = options;
      if (chain_started) point_options.branch_scan = false;
      point.result = minimize(Geometry{R}, state, init, point_options);
      warm = point.result->params;
      chain_started = true;
    } catch (const std::exception& error) {
      point.error = error.what();
    }
    points.push_back(std::move(point));
  }
  return points;
}

}  // namespace h2p
