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

#ifndef ICP_CORE_REPLAY_FILE_H_
#define ICP_CORE_REPLAY_FILE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "icp/core/environment.h"
#include "icp/core/episode.h"

namespace icp {

// Newline-delimited episode log:
//
//   # env=<name> seed=<seed> <key=value params...>
//   <step>;<a0>,<a1>,...;<reward>;<done>
//
// Rewards are printed with 17 significant digits so they round-trip.
struct ReplayRecord {
  int step = 0;
  JointAction actions;
  double reward = 0.0;
  bool done = false;
};

struct ReplayLog {
  std::string env_name;
  uint64_t seed = 0;
  std::string params;
  std::vector<ReplayRecord> records;
};

ReplayLog MakeReplayLog(const Environment& env, const Episode& episode);
std::string FormatReplay(const ReplayLog& log);
ReplayLog ParseReplay(std::string_view text);

// Resets `env` with the log's seed and re-applies every joint action.
// Returns an empty string when rewards and done flags reproduce exactly,
// otherwise a description of the first mismatch.
std::string VerifyReplay(Environment& env, const ReplayLog& log);

std::string FormatDouble(double v);

}  // namespace icp

#endif  // ICP_CORE_REPLAY_FILE_H_
