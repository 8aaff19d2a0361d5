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

#include <span>
#include <string>
#include <vector>

#include "trial.hpp"

namespace h2p {

// Converged optimizer anchors at a few internuclear distances per state.
// The same table ships as data/presets.txt; the embedded copy keeps the
// library hermetic.
struct Preset {
  double R;
  double alpha, gamma, a1, a2, b2, b3, p;
};

std::span<const Preset> preset_table(const StateLabel& state);

TrialParams params_from_preset(const StateLabel& state, const Preset& preset);

// Starting guess for an arbitrary R: nearest anchor in log-distance with the
// momentum-like parameters rescaled by the distance ratio.
TrialParams seed_params(const StateLabel& state, double R);

// Distances to solve in order, ending exactly at R.  Starts from the nearest
// anchor and moves geometrically so each warm start stays within reach of the
// optimizer; a single entry means the anchor is close enough to solve direct.
std::vector<double> continuation_path(const StateLabel& state, double R);

// Rescales a converged parameter set into a starting guess at a nearby R.
TrialParams rescale_params(const TrialParams& converged, double new_R);

// Starting guess built from the anchor-table trend: shape ratios
// (alpha/p, gamma, a1/p, a2/p^2, b2/p^2, b3/p^3) interpolated in log R and
// scaled by a caller-supplied p estimate.  Keeps the optimizer on the branch
// the anchors live on, which matters because the energy is nearly flat
// across neighboring branches while the wavefunction quality is not.
TrialParams trend_params(const StateLabel& state, double R, double p_estimate);

// Exact text of the versioned preset data file.
std::string preset_file_contents();

}  // namespace h2p
