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

#ifndef ICP_CORE_ENVIRONMENT_H_
#define ICP_CORE_ENVIRONMENT_H_

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "icp/core/action_space.h"
#include "icp/core/episode.h"
#include "icp/core/types.h"

namespace icp {

class Environment;

struct WeightedInitialState {
  double probability = 0.0;
  std::unique_ptr<Environment> env;
};

// A cooperative Dec-POMDP instance. The object owns its hidden state and its
// seeded randomness stream; Clone() yields an independent copy that evolves
// identically under identical actions.
//
// Turn-based environments mark the agents that do not act on a step as
// idle: their joint-action entry must be kNoAction and LegalActions()
// returns an empty set for them.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual std::string name() const = 0;
  // Space-separated key=value list, used for replay headers.
  virtual std::string ParamsString() const = 0;
  virtual const EnvParams& params() const = 0;
  virtual int num_agents() const = 0;
  // Every agent shares the same action space.
  virtual const ActionSpace& action_space() const = 0;

  virtual std::vector<Observation> Reset(uint64_t seed) = 0;

  // Validates lifecycle and legality for every agent before mutating
  // anything, then advances the state.
  Transition Step(const JointAction& joint_action);

  virtual bool IsTerminal() const = 0;
  virtual bool IsActing(AgentId agent) const = 0;
  // Throws EpisodeFinishedError on terminal states.
  virtual std::vector<ActionId> LegalActions(AgentId agent) const = 0;
  virtual Observation Observe(AgentId agent) const = 0;
  // Observe() plus the agent's own hidden information.
  virtual Observation ObserveGlobal(AgentId agent) const = 0;
  virtual int step_count() const = 0;
  virtual uint64_t seed() const = 0;

  // Full serialization of the hidden state, including the randomness
  // stream position.
  virtual std::string StateKey() const = 0;
  virtual std::unique_ptr<Environment> Clone() const = 0;

  // Learner-side projection of an observation; identity unless the
  // environment defines a compact view.
  virtual std::vector<int32_t> CompactPayload(const Observation& obs) const {
    return obs.payload;
  }

  // Hidden-information contexts used by message strategies: the piece of
  // `target`'s hidden state that every other agent can see. Environments
  // without such a view report zero contexts and throw UnsupportedError.
  virtual int NumContexts() const { return 0; }
  virtual int ContextFromView(const Observation& viewer, AgentId target) const;
  virtual int HiddenContext(AgentId target) const;

  // Every initial state with its probability, for exact evaluation.
  virtual std::vector<WeightedInitialState> EnumerateInitialStates(
      size_t bound) const;

  std::vector<Observation> ObserveAll() const;

 protected:
  virtual Transition DoStep(const JointAction& joint_action) = 0;
};

}  // namespace icp

#endif  // ICP_CORE_ENVIRONMENT_H_
