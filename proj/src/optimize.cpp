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

#include "optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace h2p {
namespace {

// Solves A x = b in place with partial pivoting; returns false when A is
// numerically singular.
bool solve_linear(std::vector<double>& a, std::vector<double>& b, int n) {
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    if (std::abs(a[pivot * n + col]) < 1e-300) return false;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
      std::swap(b[pivot], b[col]);
    }
    const double inv = 1.0 / a[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      const double factor = a[r * n + col] * inv;
      if (factor == 0.0) continue;
      for (int c = col; c < n; ++c) a[r * n + c] -= factor * a[col * n + c];
      b[r] -= factor * b[col];
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    double sum = b[col];
    for (int c = col + 1; c < n; ++c) sum -= a[col * n + c] * b[c];
    b[col] = sum / a[col * n + col];
  }
  return true;
}

// Symmetric Jacobi eigendecomposition; vectors come back as rows.
void jacobi_eigen(std::vector<double> a, int n, std::vector<double>& values,
                  std::vector<double>& vectors) {
  vectors.assign(n * n, 0.0);
  for (int i = 0; i < n; ++i) vectors[i * n + i] = 1.0;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
    if (off < 1e-28) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vpk = vectors[p * n + k], vqk = vectors[q * n + k];
          vectors[p * n + k] = c * vpk - s * vqk;
          vectors[q * n + k] = s * vpk + c * vqk;
        }
      }
  }
  values.resize(n);
  for (int i = 0; i < n; ++i) values[i] = a[i * n + i];
}

// Interpolates the full quadratic model on the symmetric stencil used by
// quadratic_model_polish; gradient and Hessian are in h-scaled coordinates.
struct QuadraticModel {
  double f0 = 0.0;
  std::vector<double> grad;
  std::vector<double> hess;
  long evaluations = 0;
  bool ok = false;
};

QuadraticModel fit_quadratic_model(const Objective& f, const std::vector<double>& x,
                                   double f_center, const std::vector<double>& h) {
  const int n = static_cast<int>(x.size());
  QuadraticModel model;
  const int n_coeff = 1 + n + n * (n + 1) / 2;
  std::vector<std::vector<double>> offsets;
  offsets.reserve(n_coeff);
  offsets.push_back(std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    offsets.push_back(e);
    e[i] = -1.0;
    offsets.push_back(e);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<double> e(n, 0.0);
      e[i] = 1.0;
      e[j] = 1.0;
      offsets.push_back(e);
    }
  const int m = static_cast<int>(offsets.size());
  std::vector<double> design(m * n_coeff), rhs(m);
  for (int s = 0; s < m; ++s) {
    std::vector<double> point = x;
    for (int i = 0; i < n; ++i) point[i] += offsets[s][i] * h[i];
    double fs;
    if (s == 0) {
      fs = f_center;
    } else {
      fs = f(point);
      ++model.evaluations;
    }
    rhs[s] = fs;
    int col = 0;
    design[s * n_coeff + col++] = 1.0;
    for (int i = 0; i < n; ++i) design[s * n_coeff + col++] = offsets[s][i];
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) design[s * n_coeff + col++] = offsets[s][i] * offsets[s][j];
  }
  std::vector<double> a = design, coeff = rhs;
  if (!solve_linear(a, coeff, n_coeff)) return model;
  model.f0 = coeff[0];
  model.grad.assign(coeff.begin() + 1, coeff.begin() + 1 + n);
  model.hess.assign(n * n, 0.0);
  int col = 1 + n;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double value = coeff[col++];
      if (i == j) {
        model.hess[i * n + i] = 2.0 * value;
      } else {
        model.hess[i * n + j] = value;
        model.hess[j * n + i] = value;
      }
    }
  model.ok = true;
  return model;
}

}  // namespace

MinimizeState soft_mode_polish(const Objective& f, const std::vector<double>& x0,
                               const std::vector<double>& h, int rounds,
                               const MinimizeControl& control) {
  const int n = static_cast<int>(x0.size());
  MinimizeState state;
  state.x = x0;
  state.f = f(state.x);
  ++state.evaluations;

  for (int round = 0; round < rounds; ++round) {
    const double f_round_start = state.f;
    const QuadraticModel model = fit_quadratic_model(f, state.x, state.f, h);
    state.evaluations += model.evaluations;
    if (!model.ok) break;

    std::vector<double> values, vectors;
    jacobi_eigen(model.hess, n, values, vectors);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return std::abs(values[a]) < std::abs(values[b]); });

    // every eigendirection in turn, softest first, both senses
    for (int rank = 0; rank < n; ++rank) {
      const int k = order[rank];
      const double lambda = std::max(std::abs(values[k]), 1e-18);
      // extent at which the model predicts a resolvable rise, capped so the
      // line search cannot wander percent-scale along near-gauge directions
      double t_unit = std::sqrt(2.0 * 5e-12 / lambda);
      double rel = 0.0;
      for (int i = 0; i < n; ++i)
        rel = std::max(rel, std::abs(vectors[k * n + i]) * h[i] /
                                std::max(std::abs(state.x[i]), 1e-3));
      t_unit = std::min(t_unit, 2e-3 / std::max(rel, 1e-12));
      std::vector<double> direction(n);
      for (int i = 0; i < n; ++i) direction[i] = vectors[k * n + i] * h[i] * t_unit;
      MinimizeState ls = line_search(f, state.x, state.f, direction, control);
      state.evaluations += ls.evaluations;
      if (ls.f < state.f) {
        state.x = ls.x;
        state.f = ls.f;
      }
      for (int i = 0; i < n; ++i) direction[i] = -direction[i];
      ls = line_search(f, state.x, state.f, direction, control);
      state.evaluations += ls.evaluations;
      if (ls.f < state.f) {
        state.x = ls.x;
        state.f = ls.f;
      }
      if (state.evaluations >= control.max_evaluations) break;
    }
    ++state.iterations;
    if (f_round_start - state.f < 0.5 * control.f_tol) break;
    if (state.evaluations >= control.max_evaluations) break;
  }
  state.converged = true;
  return state;
}

MinimizeState nelder_mead(const Objective& f, const std::vector<double>& x0,
                          const std::vector<double>& steps, const MinimizeControl& control) {
  const int n = static_cast<int>(x0.size());
  MinimizeState state;
  std::vector<std::vector<double>> simplex(n + 1, x0);
  std::vector<double> values(n + 1);
  for (int i = 0; i < n; ++i) simplex[i + 1][i] += steps[i];
  for (int i = 0; i <= n; ++i) {
    values[i] = f(simplex[i]);
    ++state.evaluations;
  }

  std::vector<int> order(n + 1);
  std::vector<double> centroid(n), candidate(n);
  while (state.evaluations < control.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return values[a] < values[b]; });
    const int best = order[0], worst = order[n], second = order[n - 1];

    double diameter = 0.0;
    for (int i = 1; i <= n; ++i)
      for (int j = 0; j < n; ++j)
        diameter = std::max(diameter, std::abs(simplex[order[i]][j] - simplex[best][j]) /
                                          std::max(1.0, std::abs(simplex[best][j])));
    if (values[worst] - values[best] < control.f_tol && diameter < control.x_tol) {
      state.converged = true;
      break;
    }

    for (int j = 0; j < n; ++j) {
      double sum = 0.0;
      for (int i = 0; i <= n; ++i)
        if (i != worst) sum += simplex[i][j];
      centroid[j] = sum / n;
    }

    auto blend = [&](double coeff) {
      for (int j = 0; j < n; ++j)
        candidate[j] = centroid[j] + coeff * (simplex[worst][j] - centroid[j]);
      ++state.evaluations;
      return f(candidate);
    };

    const double reflected = blend(-1.0);
    if (reflected < values[best]) {
      const std::vector<double> rpoint = candidate;
      const double expanded = blend(-2.0);
      if (expanded < reflected) {
        simplex[worst] = candidate;
        values[worst] = expanded;
      } else {
        simplex[worst] = rpoint;
        values[worst] = reflected;
      }
    } else if (reflected < values[second]) {
      simplex[worst] = candidate;
      values[worst] = reflected;
    } else {
      const double contracted = blend(reflected < values[worst] ? -0.5 : 0.5);
      if (contracted < std::min(reflected, values[worst])) {
        simplex[worst] = candidate;
        values[worst] = contracted;
      } else {
        // shrink toward the best vertex
        for (int i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (int j = 0; j < n; ++j)
            simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
          values[i] = f(simplex[i]);
          ++state.evaluations;
        }
      }
    }
    ++state.iterations;
  }

  int best = 0;
  for (int i = 1; i <= n; ++i)
    if (values[i] < values[best]) best = i;
  state.x = simplex[best];
  state.f = values[best];
  return state;
}

MinimizeState coordinate_polish(const Objective& f, const std::vector<double>& x0,
                                const std::vector<double>& steps, int rounds,
                                const MinimizeControl& control) {
  const int n = static_cast<int>(x0.size());
  MinimizeState state;
  state.x = x0;
  state.f = f(state.x);
  ++state.evaluations;

  std::vector<double> h = steps;
  for (int round = 0; round < rounds; ++round) {
    const double f_before = state.f;
    for (int i = 0; i < n; ++i) {
      if (h[i] == 0.0) continue;
      std::vector<double> probe = state.x;
      probe[i] = state.x[i] - h[i];
      const double f_lo = f(probe);
      probe[i] = state.x[i] + h[i];
      const double f_hi = f(probe);
      state.evaluations += 2;
      // parabolic vertex through the three samples
      const double denom = f_lo - 2.0 * state.f + f_hi;
      double x_new = state.x[i];
      if (denom > 0.0) {
        x_new = state.x[i] + 0.5 * h[i] * (f_lo - f_hi) / denom;
      } else if (f_lo < state.f || f_hi < state.f) {
        x_new = f_lo < f_hi ? state.x[i] - h[i] : state.x[i] + h[i];
      }
      if (x_new != state.x[i]) {
        probe = state.x;
        probe[i] = x_new;
        const double f_new = f(probe);
        ++state.evaluations;
        if (f_new < state.f) {
          state.x = probe;
          state.f = f_new;
        }
      }
      if (state.evaluations >= control.max_evaluations) break;
    }
    for (double& step : h) step *= 0.25;
    ++state.iterations;
    if (f_before - state.f < control.f_tol && round > 0) {
      state.converged = true;
      break;
    }
    if (state.evaluations >= control.max_evaluations) break;
  }
  return state;
}

MinimizeState quadratic_model_polish(const Objective& f, const std::vector<double>& x0,
                                     const std::vector<double>& h0, int iterations,
                                     const MinimizeControl& control) {
  const int n = static_cast<int>(x0.size());
  MinimizeState state;
  state.x = x0;
  state.f = f(state.x);
  ++state.evaluations;

  std::vector<double> h = h0;
  for (int iter = 0; iter < iterations; ++iter) {
    // Sample center, axis pairs, and one point per coordinate pair: exactly
    // as many samples as quadratic coefficients.
    const int n_coeff = 1 + n + n * (n + 1) / 2;
    std::vector<std::vector<double>> offsets;
    offsets.reserve(n_coeff);
    offsets.push_back(std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
      std::vector<double> e(n, 0.0);
      e[i] = 1.0;
      offsets.push_back(e);
      e[i] = -1.0;
      offsets.push_back(e);
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::vector<double> e(n, 0.0);
        e[i] = 1.0;
        e[j] = 1.0;
        offsets.push_back(e);
      }

    const int m = static_cast<int>(offsets.size());
    std::vector<double> design(m * n_coeff), rhs(m);
    for (int s = 0; s < m; ++s) {
      std::vector<double> point = state.x;
      for (int i = 0; i < n; ++i) point[i] += offsets[s][i] * h[i];
      double fs;
      if (s == 0) {
        fs = state.f;
      } else {
        fs = f(point);
        ++state.evaluations;
      }
      rhs[s] = fs;
      int col = 0;
      design[s * n_coeff + col++] = 1.0;
      for (int i = 0; i < n; ++i) design[s * n_coeff + col++] = offsets[s][i];
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          design[s * n_coeff + col++] = offsets[s][i] * offsets[s][j];
    }

    // Square system (m == n_coeff): direct solve for the model coefficients.
    std::vector<double> a = design, coeff = rhs;
    if (!solve_linear(a, coeff, n_coeff)) break;

    std::vector<double> grad(coeff.begin() + 1, coeff.begin() + 1 + n);
    std::vector<double> hess(n * n, 0.0);
    {
      int col = 1 + n;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          const double value = coeff[col++];
          if (i == j) {
            hess[i * n + i] = 2.0 * value;
          } else {
            hess[i * n + j] = value;
            hess[j * n + i] = value;
          }
        }
    }

    std::vector<double> hcopy = hess, step = grad;
    for (double& g : step) g = -g;
    if (!solve_linear(hcopy, step, n)) break;

    // Damped acceptance in scaled coordinates, capped at a few stencils.
    double norm = 0.0;
    for (double s : step) norm = std::max(norm, std::abs(s));
    const double cap = 8.0;
    const double damp = norm > cap ? cap / norm : 1.0;

    bool accepted = false;
    double factor = damp;
    const double f_before = state.f;
    for (int attempt = 0; attempt < 6 && !accepted; ++attempt) {
      std::vector<double> trial = state.x;
      for (int i = 0; i < n; ++i) trial[i] += factor * step[i] * h[i];
      const double f_trial = f(trial);
      ++state.evaluations;
      if (f_trial < state.f) {
        state.x = trial;
        state.f = f_trial;
        accepted = true;
      } else {
        factor *= 0.5;
      }
    }
    ++state.iterations;
    if (accepted) {
      // Keep the stencil while long steps land; shrink once the step fits
      // well inside it.
      if (norm * damp < 0.5) for (double& step_i : h) step_i *= 0.3;
    } else {
      for (double& step_i : h) step_i *= 0.25;
    }
    if (state.evaluations >= control.max_evaluations) break;
    if (accepted && f_before - state.f < 0.25 * control.f_tol && iter > 1) break;
  }
  state.converged = true;
  return state;
}

MinimizeState line_search(const Objective& f, const std::vector<double>& x0, double f0,
                          const std::vector<double>& direction, const MinimizeControl& control) {
  const int n = static_cast<int>(x0.size());
  MinimizeState state;
  state.x = x0;
  state.f = f0;

  const auto at = [&](double t) {
    std::vector<double> point(n);
    for (int i = 0; i < n; ++i) point[i] = x0[i] + t * direction[i];
    return point;
  };

  double t_best = 0.0;
  std::vector<double> ts = {0.0};
  std::vector<double> fs = {f0};
  for (double t : {0.5, 1.0, 2.0, 4.0}) {
    const double ft = f(at(t));
    ++state.evaluations;
    ts.push_back(t);
    fs.push_back(ft);
    if (ft < state.f) {
      state.f = ft;
      t_best = t;
    }
    if (ft > state.f + 10.0 * std::abs(state.f) * 1e-12 && t > 1.0) break;  // past the valley floor
  }
  // Two rounds of parabolic refinement around the best multiplier.
  for (int round = 0; round < 3; ++round) {
    const double vertex = parabola_vertex(ts, fs, t_best);
    if (!std::isfinite(vertex) || vertex == t_best) break;
    const double fv = f(at(vertex));
    ++state.evaluations;
    ts.push_back(vertex);
    fs.push_back(fv);
    if (fv < state.f) {
      state.f = fv;
      t_best = vertex;
    } else {
      break;
    }
    if (state.evaluations >= control.max_evaluations) break;
  }
  if (t_best != 0.0) state.x = at(t_best);
  state.converged = true;
  return state;
}

double parabola_vertex(const std::vector<double>& xs, const std::vector<double>& fs, double x0) {
  // Least squares for f ~ c0 + c1 (x - x0) + c2 (x - x0)^2.
  double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, t0 = 0, t1 = 0, t2 = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = xs[i] - x0;
    const double d2 = d * d;
    s0 += 1.0;
    s1 += d;
    s2 += d2;
    s3 += d2 * d;
    s4 += d2 * d2;
    t0 += fs[i];
    t1 += fs[i] * d;
    t2 += fs[i] * d2;
  }
  std::vector<double> a = {s0, s1, s2, s1, s2, s3, s2, s3, s4};
  std::vector<double> b = {t0, t1, t2};
  if (!solve_linear(a, b, 3) || !(b[2] > 0.0)) return x0;
  return x0 - 0.5 * b[1] / b[2];
}

}  // namespace h2p
