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

#include <stdexcept>
#include <string>

namespace h2p {

// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A parameter value that makes a formula singular (e.g. p = 0 in a tail
// expansion, or evaluation at a wavefunction node).
class singular_error : public std::runtime_error {
public:
  explicit singular_error(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite integrand sample; carries the offending node.
class quadrature_error : public std::runtime_error {
public:
  quadrature_error(const std::string& what, double node)
      : std::runtime_error(what + " at node " + std::to_string(node)), node_(node) {}
  double node() const { return node_; }

private:
  double node_ = 0.0;
};

// Optimizer or root finder exhausted its budget.
class convergence_error : public std::runtime_error {
public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// API misuse: mismatched inputs, unsupported state labels, bad config.
class usage_error : public std::invalid_argument {
public:
  explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace h2p
