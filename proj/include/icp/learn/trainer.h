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

#ifndef ICP_LEARN_TRAINER_H_
#define ICP_LEARN_TRAINER_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "icp/core/environment.h"
#include "icp/learn/agent_step.h"
#include "icp/learn/q_heads.h"
#include "icp/learn/td_update.h"

namespace icp::learn {

struct LearnerConfig {
  double alpha = 0.1;
  double gamma = 0.99;
  double epsilon = 0.1;
  // Train steps between target syncs.
  int target_update_rate = 10;
  int train_steps = 2000;
  // New episodes added to the replay buffer per train step.
  int episodes_per_step = 10;
  // Episodes replayed per train step; also the warm-up size.
  int batch_size = 32;
  int buffer_capacity = 10000;
  int eval_every = 100;
  int eval_episodes = 200;
  double default_value = 0.0;

  void Validate() const;
};

struct EvalSummary {
  double mean_return = 0.0;
  double mean_length = 0.0;
  int episodes = 0;
};

struct CurvePoint {
  int train_step = 0;
  double mean_return = 0.0;
  double mean_length = 0.0;
  double epsilon = 0.0;
  uint64_t seed = 0;
};

struct TrainOptions {
  // Called after every TD update with the replayed episode and its log.
  std::function<void(const std::vector<StepRecord>&,
                     const std::vector<TdLog>&, const QHeads&)>
      on_update;
  // Called for every freshly generated training episode.
  std::function<void(const EpisodeRecord&)> on_episode;
  // Start from these tables instead of fresh ones.
  const QHeads* initial = nullptr;
};

struct TrainResult {
  QHeads heads;
  std::vector<CurvePoint> curve;
  EvalSummary final_eval;
};

// Greedy (epsilon = 0) rollouts on a fixed, seed-derived episode set.
EvalSummary Evaluate(const Environment& prototype, const QHeads& heads,
                     const Protocol& protocol, int episodes, uint64_t seed);

// Epsilon-greedy data collection into a replay buffer, uniform replay with
// the summed-value TD update, periodic target syncs and greedy evaluation.
TrainResult Train(const Environment& prototype, const Protocol& protocol,
                  const LearnerConfig& config, uint64_t seed,
                  const TrainOptions& options = {});

}  // namespace icp::learn

#endif  // ICP_LEARN_TRAINER_H_
