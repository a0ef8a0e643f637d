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

#ifndef ICP_CORE_INBOX_H_
#define ICP_CORE_INBOX_H_

#include <optional>
#include <vector>

#include "icp/core/types.h"

namespace icp {

struct InboxEntry {
  int message = -1;  // -1: nothing received from this sender yet
  int staleness = 0;  // steps since the message arrived

  bool has_message() const { return message >= 0; }
  friend bool operator==(const InboxEntry&, const InboxEntry&) = default;
};

// The latest decoded message from each other agent.
class Inbox {
 public:
  Inbox() = default;
  Inbox(int num_agents, AgentId owner);

  AgentId owner() const { return owner_; }
  int num_agents() const { return static_cast<int>(entries_.size()); }
  const InboxEntry& entry(AgentId sender) const { return entries_.at(sender); }
  std::optional<Message> Latest(AgentId sender) const;

  // Advances staleness of every live entry by one step.
  void Age();
  // Replaces the entry for `sender` with a fresh message.
  void Post(AgentId sender, Message m);
  void Clear();

  friend bool operator==(const Inbox&, const Inbox&) = default;

 private:
  AgentId owner_ = 0;
  std::vector<InboxEntry> entries_;
};

std::vector<Inbox> MakeInboxes(int num_agents);

}  // namespace icp

#endif  // ICP_CORE_INBOX_H_
