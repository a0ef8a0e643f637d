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

#ifndef ICP_LEARN_REPLAY_BUFFER_H_
#define ICP_LEARN_REPLAY_BUFFER_H_

#include <vector>

#include "icp/core/rng.h"
#include "icp/learn/agent_step.h"

namespace icp::learn {

// Fixed-capacity episode store; the oldest episode is overwritten first.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(size_t capacity);

  size_t capacity() const { return capacity_; }
  size_t size() const { return episodes_.size(); }
  void Add(std::vector<StepRecord> episode);
  const std::vector<StepRecord>& at(size_t i) const { return episodes_.at(i); }
  // Uniform over stored episodes.
  const std::vector<StepRecord>& Sample(CounterRng& rng) const;

 private:
  size_t capacity_;
  size_t next_ = 0;
  std::vector<std::vector<StepRecord>> episodes_;
};

}  // namespace icp::learn

#endif  // ICP_LEARN_REPLAY_BUFFER_H_
