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

#ifndef ICP_CHANNEL_HAT_CODEC_H_
#define ICP_CHANNEL_HAT_CODEC_H_

#include <span>
#include <vector>

#include "icp/core/types.h"

namespace icp {

// Sum-modulo broadcast code. A sender folds one local message per receiver
// into a single public message; each receiver recovers its own local by
// subtracting the locals of every other receiver, which it can compute from
// what it observes.
Message HatEncode(std::span<const Message> locals, int k);
Message HatDecode(Message public_message, std::span<const Message> others,
                  int k);

class HatCodec {
 public:
  HatCodec(int modulus, std::vector<AgentId> receiver_order);
  // Receivers in ascending id order, excluding the sender.
  static HatCodec ForSender(int num_agents, AgentId sender, int modulus);

  int modulus() const { return modulus_; }
  const std::vector<AgentId>& receiver_order() const { return order_; }
  int num_receivers() const { return static_cast<int>(order_.size()); }
  // Position of `receiver` in the order, or -1.
  int PositionOf(AgentId receiver) const;

  // `locals` holds one message per receiver, in receiver_order.
  Message Encode(std::span<const Message> locals) const;
  // `others` holds the locals of every receiver except `receiver`, in
  // receiver_order.
  Message Decode(Message public_message, AgentId receiver,
                 std::span<const Message> others) const;

 private:
  int modulus_;
  std::vector<AgentId> order_;
};

}  // namespace icp

#endif  // ICP_CHANNEL_HAT_CODEC_H_
