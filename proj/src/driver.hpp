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

#include <map>
#include <tuple>

#include "nonlinearization.hpp"
#include "observables.hpp"
#include "shooting.hpp"
#include "variational.hpp"

namespace h2p {

// Solve orchestration with caching: anchor-chain continuation plus a
// trend-seeded start at the target distance, keeping the variationally
// better result.  One Context per consumer; not shared across threads.
class Context {
public:
  SolveOptions options;

  const SolveResult& solve(const StateLabel& state, double R);
  const SolveResult& solve_reduced(const StateLabel& state, double R);
  const ShootResult& solve_oracle(const StateLabel& state, double R);

  std::vector<CurvePoint> solve_curve(const std::vector<double>& grid, const StateLabel& state);
  TransitionResult oscillator(double R);

  void clear();

private:
  SolveResult solve_uncached(const StateLabel& state, double R, bool reduced);

  std::map<std::tuple<std::string, double, bool>, SolveResult> solves_;
  std::map<std::pair<std::string, double>, ShootResult> oracles_;
};

}  // namespace h2p
