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

#include "presets.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace h2p {
namespace {

// Published converged parameters for the gerade ground state.
constexpr Preset kGeradePresets[] = {
    {1.997193, 1.48407, 1.0299, 0.9164, 0.05384, 0.06, 0.00011, 1.483403},
    {6.0, 3.32381, 0.96357, 2.597355, 0.53443, 0.588072, 0.00552, 3.49506},
    {20.0, 10.0453, 0.95774, 9.8775, 6.8392, 6.9016, 1.352, 10.4882},
};

// Published converged parameters for the ungerade state.
constexpr Preset kUngeradePresets[] = {
    {6.0, 3.24715, 0.95706, 2.84566, 0.22098, 0.23611, -0.0027, 3.43971},
    {12.54525, 6.5275, 0.97045, 6.075, 1.46757, 1.5349, 0.1675, 6.75434},
    {20.0, 10.7397, 1.03027, 9.8077, 2.3784, 2.43705, 0.367, 10.4882},
};

constexpr double kMaxStepFactor = 1.18;

}  // namespace

std::span<const Preset> preset_table(const StateLabel& state) {
  if (!state.solver_supported())
    throw usage_error("presets exist only for the 1ssg and 2psu states");
  return state.parity == Parity::gerade ? std::span<const Preset>(kGeradePresets)
                                        : std::span<const Preset>(kUngeradePresets);
}

TrialParams params_from_preset(const StateLabel& state, const Preset& preset) {
  TrialParams params;
  params.alpha = preset.alpha;
  params.gamma = preset.gamma;
  params.a1 = preset.a1;
  params.a2 = preset.a2;
  params.b2 = preset.b2;
  params.b3 = preset.b3;
  params.p = preset.p;
  params.state = state;
  params.R = preset.R;
  return params;
}

namespace {

const Preset& nearest_preset(const StateLabel& state, double R) {
  const auto table = preset_table(state);
  const Preset* best = &table[0];
  double best_distance = std::abs(std::log(R / best->R));
  for (const Preset& candidate : table) {
    const double distance = std::abs(std::log(R / candidate.R));
    if (distance < best_distance) {
      best_distance = distance;
      best = &candidate;
    }
  }
  return *best;
}

}  // namespace

TrialParams rescale_params(const TrialParams& converged, double new_R) {
  const double ratio = new_R / converged.R;
  TrialParams params = converged;
  params.R = new_R;
  params.p = converged.p * ratio;
  params.alpha = converged.alpha * ratio;
  params.a1 = converged.a1 * ratio;
  params.a2 = converged.a2 * ratio * ratio;
  params.b2 = converged.b2 * ratio * ratio;
  params.b3 = converged.b3 * ratio * ratio;
  if (!params.feasible()) {
    // fall back to a benign denominator when the quartic rescale overshoots
    params.b2 = std::max(params.b2, 0.0);
    params.b3 = std::max(params.b3, 0.0);
  }
  return params;
}

TrialParams seed_params(const StateLabel& state, double R) {
  if (!(R > 0.0)) throw domain_error("seed_params: R must be positive");
  const Preset& anchor = nearest_preset(state, R);
  return rescale_params(params_from_preset(state, anchor), R);
}

std::vector<double> continuation_path(const StateLabel& state, double R) {
  if (!(R > 0.0)) throw domain_error("continuation_path: R must be positive");
  const Preset& anchor = nearest_preset(state, R);
  const double span = std::abs(std::log(R / anchor.R));
  const double max_step = std::log(kMaxStepFactor);
  std::vector<double> path;
  if (span <= max_step) {
    path.push_back(R);
    return path;
  }
  const int steps = static_cast<int>(std::ceil(span / max_step));
  for (int k = 1; k <= steps; ++k)
    path.push_back(anchor.R * std::pow(R / anchor.R, static_cast<double>(k) / steps));
  path.back() = R;  // guard against rounding in the endpoint
  return path;
}

TrialParams trend_params(const StateLabel& state, double R, double p_estimate) {
  if (!(R > 0.0)) throw domain_error("trend_params: R must be positive");
  if (!(p_estimate > 0.0)) throw domain_error("trend_params: p estimate must be positive");
  const auto table = preset_table(state);

  // ratio columns per anchor
  struct Ratios {
    double log_R, alpha, gamma, a1, a2, b2, b3;
  };
  std::vector<Ratios> rows;
  for (const Preset& a : table) {
    const double p2 = a.p * a.p;
    rows.push_back({std::log(a.R), a.alpha / a.p, a.gamma, a.a1 / a.p, a.a2 / p2, a.b2 / p2,
                    a.b3 / (p2 * a.p)});
  }
  const double lr = std::log(R);
  const auto lerp = [&](auto member) {
    if (lr <= rows.front().log_R) return rows.front().*member;
    if (lr >= rows.back().log_R) return rows.back().*member;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
      if (lr <= rows[i + 1].log_R) {
        const double t = (lr - rows[i].log_R) / (rows[i + 1].log_R - rows[i].log_R);
        return rows[i].*member + t * (rows[i + 1].*member - rows[i].*member);
      }
    return rows.back().*member;
  };

  const double p = p_estimate;
  TrialParams params;
  params.alpha = lerp(&Ratios::alpha) * p;
  params.gamma = lerp(&Ratios::gamma);
  params.a1 = lerp(&Ratios::a1) * p;
  params.a2 = lerp(&Ratios::a2) * p * p;
  params.b2 = lerp(&Ratios::b2) * p * p;
  params.b3 = lerp(&Ratios::b3) * p * p * p;
  params.p = p;
  params.state = state;
  params.R = R;
  if (!params.feasible()) {
    params.b2 = std::max(params.b2, 0.0);
    params.b3 = std::max(params.b3, 0.0);
  }
  return params;
}

std::string preset_file_contents() {
  std::ostringstream out;
  out << "# h2plus preset parameter table, version 1\n";
  out << "# columns: state R alpha gamma a1 a2 b2 b3 p\n";
  out.precision(10);
  for (const char* name : {"1ssg", "2psu"}) {
    const StateLabel state = *StateLabel::parse(name);
    for (const Preset& preset : preset_table(state)) {
      out << name << ' ' << preset.R << ' ' << preset.alpha << ' ' << preset.gamma << ' '
          << preset.a1 << ' ' << preset.a2 << ' ' << preset.b2 << ' ' << preset.b3 << ' '
          << preset.p << '\n';
    }
  }
  return out.str();
}

}  // namespace h2p
