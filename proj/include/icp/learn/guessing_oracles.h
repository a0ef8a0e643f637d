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

#ifndef ICP_LEARN_GUESSING_ORACLES_H_
#define ICP_LEARN_GUESSING_ORACLES_H_

#include <optional>
#include <vector>

#include "icp/envs/guessing.h"

namespace icp::learn {

// A segment f(d) per alphabet entry such that the pair (f(d), state of
// segment f(d) for d) differs for every digit: one hint then identifies the
// digit through the choice of segment. The lexicographically smallest such
// assignment, or nullopt when none exists.
std::optional<std::vector<int>> InjectiveHintMap(
    const std::vector<int>& alphabet, const guessing::SegmentTable& table);

// Minimum worst-case number of segment tests that identifies any digit of
// the alphabet. -1 when two digits cannot be told apart.
int DecisionTreeDepth(const std::vector<int>& alphabet,
                      const guessing::SegmentTable& table);

}  // namespace icp::learn

#endif  // ICP_LEARN_GUESSING_ORACLES_H_
