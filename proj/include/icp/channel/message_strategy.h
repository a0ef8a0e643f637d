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

#ifndef ICP_CHANNEL_MESSAGE_STRATEGY_H_
#define ICP_CHANNEL_MESSAGE_STRATEGY_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "icp/core/types.h"

namespace icp {

// A tabular message strategy: hidden-information context -> message.
class MessageStrategy {
 public:
  MessageStrategy() = default;
  // Every entry must lie in [0, k).
  MessageStrategy(std::vector<int> table, int k, bool frozen = true);

  int num_contexts() const { return static_cast<int>(table_.size()); }
  int k() const { return k_; }
  bool frozen() const { return frozen_; }
  void set_frozen(bool frozen) { frozen_ = frozen; }
  const std::vector<int>& table() const { return table_; }

  Message Apply(int context) const;
  // Throws std::logic_error while frozen.
  void Set(int context, Message m);

  // FNV-1a over (k, table).
  uint64_t Checksum() const;

  // "k; m0,m1,...; frozen"
  std::string Serialize() const;
  static MessageStrategy Parse(std::string_view line);

  friend bool operator==(const MessageStrategy&,
                         const MessageStrategy&) = default;

 private:
  std::vector<int> table_;
  int k_ = 0;
  bool frozen_ = true;
};

}  // namespace icp

#endif  // ICP_CHANNEL_MESSAGE_STRATEGY_H_
