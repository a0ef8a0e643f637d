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

#ifndef ICP_LEARN_SELECT_H_
#define ICP_LEARN_SELECT_H_

#include <span>

#include "icp/core/rng.h"
#include "icp/core/types.h"

namespace icp::learn {

// Highest value among `legal`; ties go to the lowest index.
int GreedyIndex(std::span<const double> q, std::span<const int> legal);

// Epsilon-greedy over `legal`: uniform with probability epsilon, greedy
// otherwise. No randomness is consumed when epsilon is 0.
int SelectAction(std::span<const double> q, std::span<const int> legal,
                 double epsilon, CounterRng& rng);

// Epsilon-greedy over the message head, restricted to `allowed` when it is
// non-empty. Only valid when the chosen action is send_info; any other
// choice is a ProtocolError.
Message SelectMessage(std::span<const double> q, int chosen, int send_info,
                      double epsilon, CounterRng& rng,
                      std::span<const int> allowed = {});

}  // namespace icp::learn

#endif  // ICP_LEARN_SELECT_H_
