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

#include "driver.hpp"

#include <cmath>

#include "presets.hpp"

namespace h2p {

SolveResult Context::solve_uncached(const StateLabel& state, double R, bool reduced) {
  SolveOptions opts = options;
  opts.reduced = reduced;

  // anchor-chain continuation toward the target
  const std::vector<double> path = continuation_path(state, R);
  TrialParams init = seed_params(state, path.front());
  if (reduced) {
    init.a2 = 0.0;
    init.b2 = 0.0;
  }
  SolveResult best;
  long total_evaluations = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    SolveOptions step_options = opts;
    step_options.branch_scan = i + 1 == path.size();  // full rigor at the target only
    best = minimize(Geometry{path[i]}, state, init, step_options);
    total_evaluations += best.diagnostics.evaluations;
    if (i + 1 < path.size()) init = rescale_params(best.params, path[i + 1]);
  }

  // second start from the anchor-table trend at the target distance; the
  // energy surface is nearly flat across neighboring parameter branches and
  // the trend start keeps the result on the anchors' branch
  try {
    TrialParams trend = trend_params(state, R, best.p_opt);
    if (reduced) {
      trend.a2 = 0.0;
      trend.b2 = 0.0;
    }
    SolveResult alternate = minimize(Geometry{R}, state, trend, opts);
    total_evaluations += alternate.diagnostics.evaluations;
    if (alternate.e_prime <= best.e_prime + 2e-13) best = alternate;
  } catch (const std::exception&) {
    // keep the chain result when the trend start fails to converge
  }

  best.diagnostics.evaluations = total_evaluations;
  attach_separation_constants(best, std::max(options.quadrature_order, 200));
  return best;
}

const SolveResult& Context::solve(const StateLabel& state, double R) {
  if (!state.solver_supported())
    throw usage_error("solve: unsupported state label " + state.name());
  Geometry{R}.validate();
  const auto key = std::make_tuple(state.name(), R, false);
  auto it = solves_.find(key);
  if (it == solves_.end()) it = solves_.emplace(key, solve_uncached(state, R, false)).first;
  return it->second;
}

const SolveResult& Context::solve_reduced(const StateLabel& state, double R) {
  if (!state.solver_supported())
    throw usage_error("solve_reduced: unsupported state label " + state.name());
  Geometry{R}.validate();
  const auto key = std::make_tuple(state.name(), R, true);
  auto it = solves_.find(key);
  if (it == solves_.end()) it = solves_.emplace(key, solve_uncached(state, R, true)).first;
  return it->second;
}

const ShootResult& Context::solve_oracle(const StateLabel& state, double R) {
  const auto key = std::make_pair(state.name(), R);
  auto it = oracles_.find(key);
  if (it == oracles_.end()) {
    const SolveResult& seed = solve(state, R);
    const double a_seed =
        std::isfinite(seed.a1y) ? 0.5 * (seed.a1x + seed.a1y) : seed.a1x;
    it = oracles_
             .emplace(key, solve_exact(Geometry{R}, state, seed.p_opt, a_seed))
             .first;
  }
  return it->second;
}

std::vector<CurvePoint> Context::solve_curve(const std::vector<double>& grid,
                                             const StateLabel& state) {
  if (grid.empty()) throw usage_error("solve_curve: empty grid");
  TrialParams first = seed_params(state, grid.front());
  try {
    first = solve(state, grid.front()).params;
  } catch (const std::exception&) {
    // fall back to the raw seed; curve() records per-point failures
  }
  auto points = curve(grid, state, first, options);
  for (CurvePoint& point : points)
    if (point.result) attach_separation_constants(*point.result,
                                                  std::max(options.quadrature_order, 200));
  return points;
}

TransitionResult Context::oscillator(double R) {
  const SolveResult& gerade = solve(StateLabel::sigma_g(), R);
  const SolveResult& ungerade = solve(StateLabel::sigma_u(), R);
  return oscillator_strength(gerade, ungerade, std::max(options.quadrature_order, 200));
}

void Context::clear() {
  solves_.clear();
  oracles_.clear();
}

}  // namespace h2p
