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

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"

namespace h2p {

// Fritsch-Carlson monotone cubic interpolant on a strictly increasing grid.
class MonotoneCubic {
public:
  MonotoneCubic() = default;

  MonotoneCubic(std::vector<double> xs, std::vector<double> ys)
      : xs_(std::move(xs)), ys_(std::move(ys)) {
    const std::size_t n = xs_.size();
    if (n < 2 || ys_.size() != n)
      throw usage_error("MonotoneCubic: need two or more matching samples");
    slopes_.resize(n);
    std::vector<double> h(n - 1), s(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      h[i] = xs_[i + 1] - xs_[i];
      if (!(h[i] > 0.0)) throw usage_error("MonotoneCubic: grid must increase");
      s[i] = (ys_[i + 1] - ys_[i]) / h[i];
    }
    if (n == 2) {
      slopes_[0] = slopes_[1] = s[0];
    } else {
      for (std::size_t i = 1; i + 1 < n; ++i) {
        if (s[i - 1] * s[i] <= 0.0) {
          slopes_[i] = 0.0;
        } else {
          const double w1 = 2.0 * h[i] + h[i - 1];
          const double w2 = h[i] + 2.0 * h[i - 1];
          slopes_[i] = (w1 + w2) / (w1 / s[i - 1] + w2 / s[i]);
        }
      }
      slopes_[0] = edge_slope(h[0], h[1], s[0], s[1]);
      slopes_[n - 1] = edge_slope(h[n - 2], h[n - 3], s[n - 2], s[n - 3]);
    }
  }

  bool covers(double x) const { return x >= xs_.front() && x <= xs_.back(); }
  double front() const { return xs_.front(); }
  double back() const { return xs_.back(); }
  double back_value() const { return ys_.back(); }

  double operator()(double x) const {
    if (!covers(x)) throw domain_error("MonotoneCubic: point outside the stored grid");
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const std::size_t i = std::min<std::size_t>(
        xs_.size() - 2, static_cast<std::size_t>(std::max<std::ptrdiff_t>(
                            0, std::distance(xs_.begin(), it) - 1)));
    const double h = xs_[i + 1] - xs_[i];
    const double t = (x - xs_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * ys_[i] + h10 * h * slopes_[i] + h01 * ys_[i + 1] + h11 * h * slopes_[i + 1];
  }

private:
  static double edge_slope(double h0, double h1, double s0, double s1) {
    double d = ((2.0 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
    if (d * s0 <= 0.0) return 0.0;
    if (s0 * s1 <= 0.0 && std::abs(d) > 3.0 * std::abs(s0)) return 3.0 * s0;
    return d;
  }

  std::vector<double> xs_, ys_;
  std::vector<double> slopes_;
};

}  // namespace h2p
