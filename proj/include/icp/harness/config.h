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

#ifndef ICP_HARNESS_CONFIG_H_
#define ICP_HARNESS_CONFIG_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "icp/channel/channel.h"
#include "icp/core/environment.h"
#include "icp/envs/registry.h"
#include "icp/learn/agent_step.h"
#include "icp/learn/delayed_map.h"
#include "icp/learn/trainer.h"

namespace icp::harness {

enum class Pipeline { kNone, kRm, kDelayedMap, kCheat };

std::string ToString(Pipeline p);
Pipeline ParsePipeline(std::string_view s);

// One experiment: an environment, a channel, a learner and a list of seeds.
//
// File format: one "key = value" per line, '#' starts a comment. Keys:
//   env.name, env.<parameter>             environment and its parameters
//   channel.mode                           none|one_to_one|hat|direct_cheat
//   channel.map_seed                       base seed of the random map
//   channel.message_size                   direct channel size (0: K)
//   learner.<field>                        LearnerConfig fields, key_view
//   pipeline                               none|rm|delayed_map|cheat
//   pipeline.phase1, pipeline.phase1_train_steps, pipeline.cluster_seed,
//   pipeline.context_episodes, pipeline.shuffle_candidates
//   seeds                                  comma-separated list
//   output_dir
struct ExperimentConfig {
  std::string env_name;
  ParamMap env_params;
  ChannelMode mode = ChannelMode::kNone;
  uint64_t map_seed = 0;
  int message_size = 0;
  learn::LearnerConfig learner;
  learn::KeyView key_view = learn::KeyView::kFull;
  Pipeline pipeline = Pipeline::kNone;
  learn::DelayedMapConfig delayed_map;
  std::vector<uint64_t> seeds = {1};
  std::string output_dir = "out";

  // Throws ConfigError naming the offending field.
  void Validate() const;
};

ExperimentConfig ParseConfig(std::string_view text);
ExperimentConfig LoadConfigFile(const std::string& path);

// The configured environment, without any channel wrapper.
std::unique_ptr<Environment> MakeBaseEnvironment(const ExperimentConfig& c);
// The environment learners interact with: the base environment, wrapped in
// a direct channel for the cheat pipeline.
std::unique_ptr<Environment> MakeRunEnvironment(const ExperimentConfig& c);

// The random message map used by `seed`'s run.
InfoMap RunMap(const ExperimentConfig& c, const Environment& env,
               uint64_t seed);
// Direct channel size: message_size, or K when it is 0.
int DirectMessageSize(const ExperimentConfig& c, const Environment& env);

}  // namespace icp::harness

#endif  // ICP_HARNESS_CONFIG_H_
