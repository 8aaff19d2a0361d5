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

#include "quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace h2p {
namespace {

struct LegendreBase {
  std::vector<double> nodes;    // ascending on (-1, 1)
  std::vector<double> weights;
};

// Newton iteration on P_n with the three-term recurrence; ~1e-15 accuracy.
LegendreBase compute_legendre(int n) {
  LegendreBase base;
  base.nodes.resize(n);
  base.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-style initial guess, then Newton.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    base.nodes[i] = -x;  // guesses enumerate the positive half, store mirrored
    base.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    base.weights[i] = w;
    base.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) base.nodes[n / 2] = 0.0;
  return base;
}

const LegendreBase& legendre_base(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<LegendreBase>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<LegendreBase>(compute_legendre(order));
  return *slot;
}

}  // namespace

QuadratureRule gauss_rule(int order) {
  if (order < 1) throw domain_error("gauss_rule: order must be >= 1");
  const LegendreBase& base = legendre_base(order);
  QuadratureRule rule;
  rule.kind = RuleKind::finite_legendre;
  rule.order = order;
  rule.nodes = base.nodes;
  rule.weights = base.weights;
  return rule;
}

QuadratureRule semi_infinite_rule(int order, double scale) {
  if (order < 1) throw domain_error("semi_infinite_rule: order must be >= 1");
  if (!(scale > 0.0)) throw domain_error("semi_infinite_rule: scale must be positive");
  const LegendreBase& base = legendre_base(order);
  QuadratureRule rule;
  rule.kind = RuleKind::semi_infinite_mapped;
  rule.order = order;
  rule.scale = scale;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    const double t = 0.5 * (base.nodes[i] + 1.0);  // (0, 1)
    const double omt = 1.0 - t;
    rule.nodes[i] = 1.0 + scale * t / omt;
    rule.weights[i] = 0.5 * base.weights[i] * scale / (omt * omt);
  }
  return rule;
}

QuadratureRule refined_rule(const QuadratureRule& rule) {
  return rule.kind == RuleKind::finite_legendre
             ? gauss_rule(2 * rule.order)
             : semi_infinite_rule(2 * rule.order, rule.scale);
}

}  // namespace h2p
