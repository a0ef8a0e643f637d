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

#ifndef ICP_CHANNEL_INFO_MAP_H_
#define ICP_CHANNEL_INFO_MAP_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "icp/core/types.h"

namespace icp {

// Decodable bijection between messages {0..K-1} and the K scouting actions
// (identified by their position in the scouting list).
class InfoMap {
 public:
  // Optional remapping of an encoded scouting index given common-knowledge
  // context. Unset by default; the map is then context-free.
  using ContextHook =
      std::function<int(int scouting_index, std::span<const int32_t>)>;

  InfoMap() = default;

  // Uniformly random permutation, deterministic per seed. K must be >= 1.
  static InfoMap Random(int k, uint64_t seed);
  static InfoMap Identity(int k);
  // Throws std::invalid_argument unless `perm` is a permutation of 0..K-1.
  static InfoMap FromPermutation(std::vector<int> perm, uint64_t seed = 0);

  int size() const { return static_cast<int>(perm_.size()); }
  uint64_t seed() const { return seed_; }
  const std::vector<int>& permutation() const { return perm_; }

  int Encode(Message m) const;
  Message Decode(int scouting_index) const;

  int EncodeWithContext(Message m, std::span<const int32_t> context) const;
  void set_context_hook(ContextHook hook) { context_hook_ = std::move(hook); }

  // A fresh permutation of the same size; this map is left untouched.
  InfoMap Shuffled(uint64_t seed) const;

  // "K; p0,p1,...,pK-1; seed"
  std::string Serialize() const;
  static InfoMap Parse(std::string_view line);

  friend bool operator==(const InfoMap& a, const InfoMap& b) {
    return a.perm_ == b.perm_ && a.seed_ == b.seed_;
  }

 private:
  std::vector<int> perm_;
  std::vector<int> inverse_;
  uint64_t seed_ = 0;
  ContextHook context_hook_;
};

}  // namespace icp

#endif  // ICP_CHANNEL_INFO_MAP_H_
