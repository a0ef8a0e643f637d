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

#ifndef ICP_CHANNEL_CHANNEL_H_
#define ICP_CHANNEL_CHANNEL_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "icp/channel/hat_codec.h"
#include "icp/channel/info_map.h"
#include "icp/channel/message_strategy.h"
#include "icp/core/environment.h"
#include "icp/core/inbox.h"

namespace icp {

enum class ChannelMode { kNone, kOneToOne, kHat, kDirectCheat };

std::string ToString(ChannelMode mode);
// Accepts none | one_to_one | hat | direct_cheat.
ChannelMode ParseChannelMode(std::string_view s);

struct ChannelSetup {
  ChannelMode mode = ChannelMode::kNone;
  const InfoMap* map = nullptr;
  // Required for hat decoding and for strategy-driven senders.
  const MessageStrategy* strategy = nullptr;
};

// The receiver of a one-to-one strategy message: the next agent in id order.
AgentId StrategyTarget(AgentId sender, int num_agents);

// Local message for every receiver of `sender`, in the codec's order, by
// applying `strategy` to each receiver's hidden context as it appears in
// `view` (an observation held by an agent other than that receiver).
std::vector<Message> HatLocals(const MessageStrategy& strategy,
                               const Environment& env, const Observation& view,
                               const HatCodec& codec);

// The message a strategy-driven sender transmits this step.
Message StrategyMessage(const ChannelSetup& setup, const Environment& env,
                        AgentId sender);

// Applies one step of channel traffic to every inbox. `pre_step` is the
// environment as it was when the joint action was chosen; hat receivers
// recompute the other receivers' locals from their own view of it.
// `broadcasts` is only read in direct_cheat mode (one optional entry per
// agent).
void ChannelObserve(const Environment& pre_step, const JointAction& joint,
                    std::span<const std::optional<Message>> broadcasts,
                    const ChannelSetup& setup, std::vector<Inbox>& inboxes);

}  // namespace icp

#endif  // ICP_CHANNEL_CHANNEL_H_
