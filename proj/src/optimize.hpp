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

#pragma once

#include <functional>
#include <vector>

namespace h2p {

using Objective = std::function<double(const std::vector<double>&)>;

struct MinimizeControl {
  long max_evaluations = 200000;
  double f_tol = 1e-13;   // absolute spread tolerance on function values
  double x_tol = 1e-10;   // relative simplex diameter tolerance
};

struct MinimizeState {
  std::vector<double> x;
  double f = 0.0;
  long evaluations = 0;
  int iterations = 0;
  bool converged = false;
};

// Deterministic Nelder-Mead with standard coefficients.  `steps` sets the
// initial simplex edge per coordinate.
MinimizeState nelder_mead(const Objective& f, const std::vector<double>& x0,
                          const std::vector<double>& steps, const MinimizeControl& control);

// Sequential per-coordinate parabolic refinement with shrinking probes.
MinimizeState coordinate_polish(const Objective& f, const std::vector<double>& x0,
                                const std::vector<double>& steps, int rounds,
                                const MinimizeControl& control);

// Fits a full quadratic model on a symmetric stencil and takes damped Newton
// steps to its vertex; shrinks the stencil between iterations.  Cleans up the
// last ~4 digits that simplex and coordinate passes leave behind.
MinimizeState quadratic_model_polish(const Objective& f, const std::vector<double>& x0,
                                     const std::vector<double>& h0, int iterations,
                                     const MinimizeControl& control);

// Least-squares parabola vertex through samples (x_i, f_i); returns x0 when
// the fitted curvature is not positive.
double parabola_vertex(const std::vector<double>& xs, const std::vector<double>& fs, double x0);

// Parabolic line search along an arbitrary direction, the Powell-style move
// that follows curved valleys the axis and model steps crawl through.
MinimizeState line_search(const Objective& f, const std::vector<double>& x0, double f0,
                          const std::vector<double>& direction, const MinimizeControl& control);

// Diagonalizes the fitted quadratic model and runs bidirectional line
// searches along the softest eigendirections, where gradient information
// drowns in roundoff and only long-range sampling resolves the minimum.
MinimizeState soft_mode_polish(const Objective& f, const std::vector<double>& x0,
                               const std::vector<double>& h, int rounds,
                               const MinimizeControl& control);

}  // namespace h2p
