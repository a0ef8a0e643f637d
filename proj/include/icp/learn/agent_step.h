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

#ifndef ICP_LEARN_AGENT_STEP_H_
#define ICP_LEARN_AGENT_STEP_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icp/channel/channel.h"
#include "icp/channel/info_map.h"
#include "icp/channel/message_strategy.h"
#include "icp/core/environment.h"
#include "icp/core/inbox.h"
#include "icp/core/obs_key.h"
#include "icp/core/rng.h"
#include "icp/learn/q_heads.h"

namespace icp::learn {

// Which observation payload a learner keys its tables on. Compact keys use
// the environment's CompactPayload and only fresh inbox messages.
enum class KeyView { kFull, kCompact };

std::string ToString(KeyView view);
KeyView ParseKeyView(std::string_view s);

// Everything that decides how agents act and communicate, apart from the
// tables themselves.
//
//   kNone         the action head covers the native action space.
//   kOneToOne     the action head covers U' (regular actions + send_info);
//   kHat          send_info picks a message (message head, or `strategy`
//                 when present) that `map` turns into a scouting action.
//   kDirectCheat  the environment must be a CheatChannelEnv; the action head
//                 covers its native actions and every acting agent also
//                 broadcasts a message chosen by the message head.
struct Protocol {
  ChannelMode mode = ChannelMode::kNone;
  InfoMap map;
  std::optional<MessageStrategy> strategy;
  int message_size = 0;
  KeyView key_view = KeyView::kFull;
  // Key on ObserveGlobal, which includes each agent's own hidden state.
  bool global_view = false;

  ChannelSetup setup() const;
  bool prime_space() const {
    return mode == ChannelMode::kOneToOne || mode == ChannelMode::kHat;
  }
  int ActionWidth(const Environment& env) const;
  // Throws ConfigError when the protocol does not fit the environment.
  void Validate(const Environment& env) const;
};

// One agent's choice on one step, with what the TD update needs.
struct Decision {
  AgentId agent = 0;
  ObservationKey key;
  std::vector<int> legal;  // legal action-head indices, ascending
  int head_index = -1;
  int message = -1;
  bool message_from_head = false;
  ActionId action = kNoAction;
  std::optional<Message> broadcast;
  int own_context = -1;     // HiddenContext(agent), when defined
  int target_context = -1;  // agent's view of its strategy target
};

struct StepRecord {
  std::vector<Decision> decisions;  // acting agents only
  double reward = 0.0;
  bool done = false;
};

struct EpisodeRecord {
  Episode episode;
  std::vector<StepRecord> steps;
};

ObservationKey AgentKey(const Environment& env, AgentId agent,
                        const Inbox& inbox, const Protocol& protocol);

Decision Decide(const Environment& env, AgentId agent, const Inbox& inbox,
                const QHeads& heads, const Protocol& protocol, double epsilon,
                CounterRng& rng);

// Inboxes an environment step should read: the cheat wrapper's own, or the
// caller's.
const std::vector<Inbox>& ActiveInboxes(const Environment& env,
                                        const std::vector<Inbox>& local);

// Steps `env` and updates the inboxes: the cheat wrapper's own when `env` is
// one, otherwise `local` according to `setup`.
Transition StepWithChannel(
    Environment& env, const JointAction& joint,
    const std::vector<std::optional<Message>>& broadcasts,
    const ChannelSetup& setup, std::vector<Inbox>& local);

// Applies one joint choice, including the channel update.
Transition ApplyDecisions(Environment& env, const std::vector<Decision>& ds,
                          const Protocol& protocol, std::vector<Inbox>& local);

// Resets `env` with `seed` and plays one episode.
EpisodeRecord Rollout(Environment& env, uint64_t seed, const QHeads& heads,
                      const Protocol& protocol, double epsilon,
                      CounterRng& rng);

}  // namespace icp::learn

#endif  // ICP_LEARN_AGENT_STEP_H_
