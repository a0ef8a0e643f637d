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

#ifndef ICP_CORE_ACTION_SPACE_H_
#define ICP_CORE_ACTION_SPACE_H_

#include <vector>

#include "icp/core/types.h"

namespace icp {

// Partition of an agent's dense action ids into regular actions and
// scouting actions. The reduced space used under the implicit channel
// protocol lists the regular actions in order followed by one synthetic
// send_info entry; indices into that space are called "prime" indices.
class ActionSpace {
 public:
  ActionSpace() = default;
  // Throws ConfigError unless regular and scouting are disjoint and together
  // cover 0..n-1 with at least one scouting action.
  ActionSpace(std::vector<ActionId> regular, std::vector<ActionId> scouting);

  int num_actions() const { return static_cast<int>(kind_.size()); }
  int num_regular() const { return static_cast<int>(regular_.size()); }
  // K, the size of the scouting set.
  int num_scouting() const { return static_cast<int>(scouting_.size()); }

  const std::vector<ActionId>& regular() const { return regular_; }
  const std::vector<ActionId>& scouting() const { return scouting_; }

  bool IsScouting(ActionId a) const;
  // Position of `a` within the scouting list, or -1.
  int ScoutingIndex(ActionId a) const;
  ActionId ScoutingAction(int index) const;

  // Prime space: |regular| + 1 entries, the last being send_info.
  int num_prime() const { return num_regular() + 1; }
  int send_info() const { return num_regular(); }
  ActionId PrimeToAction(int prime) const;
  // -1 for scouting actions.
  int ActionToPrime(ActionId a) const;

 private:
  std::vector<ActionId> regular_;
  std::vector<ActionId> scouting_;
  // Per action id: index into regular_ (>= 0) or -(1 + index into scouting_).
  std::vector<int> kind_;
};

}  // namespace icp

#endif  // ICP_CORE_ACTION_SPACE_H_
