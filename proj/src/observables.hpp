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

#include "variational.hpp"

namespace h2p {

// Radiative transition between the two lowest states at fixed R.  The axial
// dipole matrix element uses the internuclear midpoint as origin; the
// transverse components vanish identically for sigma-sigma transitions.
struct TransitionResult {
  double R = 0.0;
  double e_g = 0.0;      // 1ssg total energy [Ry]
  double e_u = 0.0;      // 2psu total energy [Ry]
  double delta_e = 0.0;  // e_u - e_g [Ry]
  double q_z = 0.0;      // axial dipole matrix element [Bohr]
  double f01 = 0.0;      // oscillator strength, dimensionless
};

// <g| z |u> with both wavefunctions normalized over the full volume element.
// Factorizes into products of four 1-D cross moments.
double dipole_q(const SolveResult& gerade, const SolveResult& ungerade, int order);

// f01 = (2/3) (E_u - E_g)[Ry] |Q|^2, the convention that reproduces the
// published transition tables.
TransitionResult oscillator_strength(const SolveResult& gerade, const SolveResult& ungerade,
                                     int order);

}  // namespace h2p
