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

#include <cmath>
#include <vector>

#include "errors.hpp"

namespace h2p {

enum class RuleKind { finite_legendre, semi_infinite_mapped };

// Deterministic 1-D rule: Gauss-Legendre on [-1, 1], or the same rule pushed
// onto [1, inf) through the rational map xi = 1 + scale * t / (1 - t).
// Weights are positive and nodes lie strictly inside the open domain.
struct QuadratureRule {
  RuleKind kind = RuleKind::finite_legendre;
  int order = 0;
  double scale = 1.0;  // map parameter, semi-infinite kind only
  std::vector<double> nodes;
  std::vector<double> weights;
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;  // |order-N result - order-2N result|
};

// Gauss-Legendre nodes/weights on [-1, 1]; underlying nodes are memoized per
// order.  Throws domain_error for order < 1.
QuadratureRule gauss_rule(int order);

// Mapped rule for integrals over [1, inf).  The scale parameter sets the node
// density; callers integrating e^{-a xi} tails pick scale ~ 1/a.
QuadratureRule semi_infinite_rule(int order, double scale);

// Single weighted sum in fixed node order with extended-precision
// accumulation; bit-reproducible.  Throws quadrature_error (carrying the
// node) on a non-finite sample.
template <class F>
double weighted_sum(const QuadratureRule& rule, F&& f) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double fx = f(rule.nodes[i]);
    if (!std::isfinite(fx))
      throw quadrature_error("non-finite integrand sample", rule.nodes[i]);
    acc += static_cast<long double>(rule.weights[i]) * fx;
  }
  return static_cast<double>(acc);
}

// Doubled-order sibling used for the a posteriori error estimate.
QuadratureRule refined_rule(const QuadratureRule& rule);

// Weighted sum at order 2N plus the |N - 2N| error estimate.
template <class F>
IntegralResult integrate(F&& f, const QuadratureRule& rule) {
  const double coarse = weighted_sum(rule, f);
  const double fine = weighted_sum(refined_rule(rule), f);
  return {fine, std::abs(fine - coarse)};
}

}  // namespace h2p
