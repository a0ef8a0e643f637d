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

#ifndef ICP_LEARN_EXHAUSTIVE_EVAL_H_
#define ICP_LEARN_EXHAUSTIVE_EVAL_H_

#include <cstddef>

#include "icp/core/environment.h"
#include "icp/learn/policy.h"

namespace icp::learn {

struct ExactValue {
  double expected_return = 0.0;  // undiscounted
  double expected_length = 0.0;
  size_t initial_states = 0;
  size_t nodes = 0;  // distinct (state, inbox) pairs visited
};

// Exact expectation of `policy` over every initial state of `env` and every
// branch of the policy's distribution. Throws BoundError when more than
// `bound` initial states or nodes would be needed.
ExactValue ExhaustiveEval(const Environment& env, const Policy& policy,
                          size_t bound);

}  // namespace icp::learn

#endif  // ICP_LEARN_EXHAUSTIVE_EVAL_H_
