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

#ifndef ICP_CORE_EPISODE_H_
#define ICP_CORE_EPISODE_H_

#include <cstdint>
#include <vector>

#include "icp/core/types.h"

namespace icp {

// What one agent perceives. The payload layout is environment-specific;
// `global` marks a full-observability view that includes the agent's own
// hidden information.
struct Observation {
  AgentId agent = 0;
  int step = 0;
  bool global = false;
  std::vector<int32_t> payload;

  friend bool operator==(const Observation&, const Observation&) = default;
};

struct Transition {
  JointAction joint_action;
  // Team reward, identical for every agent.
  double reward = 0.0;
  std::vector<Observation> observations_next;
  bool done = false;
};

struct Episode {
  uint64_t seed = 0;
  double gamma = 1.0;
  std::vector<Transition> transitions;

  int length() const { return static_cast<int>(transitions.size()); }
  // sum_t gamma^(t-1) r_t
  double Return() const;
};

}  // namespace icp

#endif  // ICP_CORE_EPISODE_H_
