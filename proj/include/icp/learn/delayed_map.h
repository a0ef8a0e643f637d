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

#ifndef ICP_LEARN_DELAYED_MAP_H_
#define ICP_LEARN_DELAYED_MAP_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icp/channel/info_map.h"
#include "icp/channel/message_strategy.h"
#include "icp/core/environment.h"
#include "icp/learn/agent_step.h"
#include "icp/learn/trainer.h"

namespace icp::learn {

// Single-head Q-learning on global keys (each agent sees its own hidden
// state) with the native action space.
TrainResult TrainFullObs(const Environment& prototype, KeyView key_view,
                         const LearnerConfig& config, uint64_t seed);

// Dual-head training on a direct broadcast channel of `message_size`
// messages. With `remove_scouting` the scouting actions are unavailable.
struct DirectResult {
  TrainResult train;
  Protocol protocol;
};
DirectResult PretrainDirect(const Environment& prototype, int message_size,
                            bool remove_scouting, KeyView key_view,
                            const LearnerConfig& config, uint64_t seed);

// phi(context) = argmax over messages of the summed message-head rows at
// sender keys whose strategy target has that context. Unobserved contexts
// get message 0.
MessageStrategy DistillStrategy(const Environment& cheat_env,
                                const QHeads& heads, const Protocol& protocol,
                                int episodes, double epsilon, uint64_t seed);

// Trains a fresh action head while the protocol's strategy stays frozen.
// Throws ConfigError without a strategy or outside one_to_one/hat.
TrainResult FineTune(const Environment& prototype, const Protocol& protocol,
                     const LearnerConfig& config, uint64_t seed);

struct ShuffleCandidate {
  InfoMap map;
  EvalSummary eval;
};

struct ShuffleStudy {
  EvalSummary original;
  std::vector<ShuffleCandidate> candidates;
  // Index into `candidates`, or -1 when the original map is kept.
  int best = -1;
};

struct DelayedMapConfig {
  // full_obs | direct
  std::string phase1 = "full_obs";
  // Zero uses the learner's train_steps.
  int phase1_train_steps = 0;
  uint64_t cluster_seed = 0;
  int context_episodes = 200;
  // Shuffled embeddings to fine-tune after the first fine-tune; 0 skips.
  int shuffle_candidates = 0;

  void Validate() const;
};

struct DelayedMapResult {
  TrainResult phase1;
  MessageStrategy strategy;
  // The kept protocol and its fine-tuned tables.
  Protocol protocol;
  TrainResult fine_tuned;
  std::optional<ShuffleStudy> shuffle;
};

// Pre-training, strategy extraction, mapping onto scouting actions with
// `map` under `mode`, then fine-tuning. With shuffle candidates, each of
// map.Shuffled(1..n) is fine-tuned from scratch with the same frozen
// strategy; the best evaluated embedding is kept, the original on ties.
DelayedMapResult RunDelayedMap(const Environment& prototype, ChannelMode mode,
                               const InfoMap& map, KeyView key_view,
                               const LearnerConfig& config,
                               const DelayedMapConfig& dm, uint64_t seed);

}  // namespace icp::learn

#endif  // ICP_LEARN_DELAYED_MAP_H_
