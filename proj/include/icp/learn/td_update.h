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

#ifndef ICP_LEARN_TD_UPDATE_H_
#define ICP_LEARN_TD_UPDATE_H_

#include <vector>

#include "icp/learn/agent_step.h"
#include "icp/learn/q_heads.h"

namespace icp::learn {

// Values behind one TD step. q_agents holds each acting agent's chosen
// action-head entry at update time; q_sum is their sum in agent order.
struct TdLog {
  double reward = 0.0;
  std::vector<double> q_agents;
  double q_sum = 0.0;
  double q_next_sum = 0.0;  // 0 on terminal steps
  double delta = 0.0;
  bool done = false;
};

// Summed-value TD update over one recorded episode, in step order:
//   delta_t = r_t + gamma * sum_i max_legal Q_target(key_{t+1,i})
//             - sum_i Q(key_{t,i}, chosen_{t,i})
// and every chosen action entry, plus every message entry chosen by the
// message head, moves by alpha * delta_t.
std::vector<TdLog> VdnTdUpdate(const std::vector<StepRecord>& steps,
                               QHeads& heads, double alpha, double gamma);

}  // namespace icp::learn

#endif  // ICP_LEARN_TD_UPDATE_H_
