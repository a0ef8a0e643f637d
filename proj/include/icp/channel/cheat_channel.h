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

#ifndef ICP_CHANNEL_CHEAT_CHANNEL_H_
#define ICP_CHANNEL_CHEAT_CHANNEL_H_

#include <memory>
#include <optional>
#include <vector>

#include "icp/core/environment.h"
#include "icp/core/inbox.h"

namespace icp {

// Adds a direct broadcast slot per agent per step to an environment. A
// broadcast sent on step t is in every other agent's inbox on step t+1.
// Dynamics and rewards of the wrapped environment are untouched. With
// `remove_scouting` the scouting actions are masked out, which is the
// pre-training environment of the delayed-map pipeline.
class CheatChannelEnv : public Environment {
 public:
  CheatChannelEnv(std::unique_ptr<Environment> inner, int message_size,
                  bool remove_scouting = false);
  CheatChannelEnv(const CheatChannelEnv& other);

  int message_size() const { return message_size_; }
  bool remove_scouting() const { return remove_scouting_; }
  const Environment& inner() const { return *inner_; }
  const std::vector<Inbox>& inboxes() const { return inboxes_; }

  // `broadcasts` is empty (nobody broadcasts) or has one entry per agent.
  Transition StepWithBroadcasts(
      const JointAction& joint,
      const std::vector<std::optional<Message>>& broadcasts);

  std::string name() const override;
  std::string ParamsString() const override;
  const EnvParams& params() const override { return inner_->params(); }
  int num_agents() const override { return inner_->num_agents(); }
  const ActionSpace& action_space() const override {
    return inner_->action_space();
  }
  std::vector<Observation> Reset(uint64_t seed) override;
  bool IsTerminal() const override { return inner_->IsTerminal(); }
  bool IsActing(AgentId agent) const override {
    return inner_->IsActing(agent);
  }
  std::vector<ActionId> LegalActions(AgentId agent) const override;
  Observation Observe(AgentId agent) const override {
    return inner_->Observe(agent);
  }
  Observation ObserveGlobal(AgentId agent) const override {
    return inner_->ObserveGlobal(agent);
  }
  int step_count() const override { return inner_->step_count(); }
  uint64_t seed() const override { return inner_->seed(); }
  std::string StateKey() const override;
  std::unique_ptr<Environment> Clone() const override;
  std::vector<int32_t> CompactPayload(const Observation& obs) const override {
    return inner_->CompactPayload(obs);
  }
  int NumContexts() const override { return inner_->NumContexts(); }
  int ContextFromView(const Observation& viewer,
                      AgentId target) const override {
    return inner_->ContextFromView(viewer, target);
  }
  int HiddenContext(AgentId target) const override {
    return inner_->HiddenContext(target);
  }
  // The inner environment's initial states, each with empty inboxes.
  std::vector<WeightedInitialState> EnumerateInitialStates(
      size_t bound) const override;

 protected:
  Transition DoStep(const JointAction& joint) override;

 private:
  std::unique_ptr<Environment> inner_;
  int message_size_;
  bool remove_scouting_;
  std::vector<Inbox> inboxes_;
  std::vector<std::optional<Message>> pending_;
};

}  // namespace icp

#endif  // ICP_CHANNEL_CHEAT_CHANNEL_H_
