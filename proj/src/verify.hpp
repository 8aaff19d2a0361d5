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

#include <string>
#include <vector>

#include "driver.hpp"

namespace h2p {

// One acceptance criterion outcome with its measured numbers.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  bool quick = false;  // restrict to the R = 2 subset
};

// Runs the acceptance criteria against published reference values; every
// threshold is fixed here, in code.
std::vector<CriterionResult> run_acceptance(Context& context, const VerifyOptions& options);

}  // namespace h2p
