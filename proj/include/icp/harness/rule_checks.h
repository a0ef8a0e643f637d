// Copyright 2026 The ICP Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef ICP_HARNESS_RULE_CHECKS_H_
#define ICP_HARNESS_RULE_CHECKS_H_

#include <cstdint>
#include <string>

namespace icp::harness {

struct CheckReport {
  long long episodes = 0;  // random episodes or enumerated initial states
  long long checks = 0;
  long long violations = 0;
  std::string first_violation;

  void Expect(bool ok, const std::string& what);
  bool passed() const { return violations == 0 && checks > 0; }
};

// Rule suites over random seeded episodes (uniform legal actions).

// Return identity 10 * correct - 0.1 * hints, turn order, hint budget and
// episode length, alternating N = 2 and N = 3 on the full alphabet.
CheckReport GuessingRuleSuite(int episodes, uint64_t seed);
// Goal redraw distance, reward = goals reached, known-bit soundness and
// horizon, alternating N = 2 and N = 3 on a 4x4 torus.
CheckReport RevealingRuleSuite(int episodes, uint64_t seed);
// Card conservation, token/life bounds, monotone fireworks, return = score,
// and hint neutrality (hints change only tokens and public knowledge).
CheckReport HanabiRuleSuite(int episodes, uint64_t seed);

// Hidden-information hygiene, exhaustive at tiny scales.

// Every reachable state of N = 2, digits {0..3}, hint limit 6: replacing an
// agent's digit by any digit consistent with its revealed facts leaves its
// payload unchanged.
CheckReport GuessingHygiene();
// Every layout at H = 3, N = 2 and every partner move: relocating agent 0's
// goal among cells with identical known bits leaves its payload unchanged.
CheckReport RevealingHygiene();
// Every reachable state from `deals` random deals at C = 2, R = 2, one hint
// token: swapping an own card with any deck card or own card consistent with
// public knowledge leaves the payload unchanged.
CheckReport HanabiHygiene(int deals, uint64_t seed);

}  // namespace icp::harness

#endif  // ICP_HARNESS_RULE_CHECKS_H_
