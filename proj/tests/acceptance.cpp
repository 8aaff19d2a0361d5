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

// Acceptance gate: runs every published-value check through the public C
// interface and prints one pass/fail line per criterion.

#include <cstdio>
#include <cstring>

#include "h2plus/h2plus.h"

int main(int argc, char** argv) {
  int quick = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = 1;

  h2p_context* context = h2p_context_create();
  if (!context) {
    std::fprintf(stderr, "failed to create context\n");
    return 2;
  }

  h2p_verify_report* report = nullptr;
  const h2p_status status = h2p_verify_run(context, quick, &report);
  if (status != H2P_OK) {
    std::fprintf(stderr, "verification failed to run: %s (%s)\n",
                 h2p_context_last_error(context), h2p_status_name(status));
    h2p_context_destroy(context);
    return 2;
  }

  for (int i = 0; i < h2p_verify_count(report); ++i) {
    std::printf("[%s] criterion %d: %s — %s\n",
                h2p_verify_passed(report, i) ? "PASS" : "FAIL", h2p_verify_id(report, i),
                h2p_verify_title(report, i), h2p_verify_detail(report, i));
  }
  const int all_passed = h2p_verify_all_passed(report);
  std::printf("%s\n", all_passed ? "acceptance: all criteria passed"
                                 : "acceptance: FAILURES present");

  h2p_verify_report_destroy(report);
  h2p_context_destroy(context);
  return all_passed ? 0 : 1;
}
