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

#ifndef ICP_LEARN_POLICY_H_
#define ICP_LEARN_POLICY_H_

#include <optional>
#include <vector>

#include "icp/channel/channel.h"
#include "icp/core/environment.h"
#include "icp/core/inbox.h"
#include "icp/envs/guessing.h"
#include "icp/learn/agent_step.h"
#include "icp/learn/q_heads.h"
#include "icp/learn/trainer.h"

namespace icp::learn {

struct Choice {
  ActionId action = kNoAction;
  std::optional<Message> broadcast;
  double probability = 1.0;
};

// A joint-policy component for one acting agent, as a distribution.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::vector<Choice> Choices(const Environment& env, AgentId agent,
                                      const Inbox& inbox) const = 0;
  // How scouting actions turn into inbox messages.
  virtual ChannelSetup channel() const { return {}; }
};

// Greedy play from learned tables.
class BundlePolicy : public Policy {
 public:
  BundlePolicy(const QHeads& heads, const Protocol& protocol)
      : heads_(heads), protocol_(protocol) {}
  std::vector<Choice> Choices(const Environment& env, AgentId agent,
                              const Inbox& inbox) const override;
  ChannelSetup channel() const override { return protocol_.setup(); }

 private:
  const QHeads& heads_;
  const Protocol& protocol_;
};

class UniformRandomPolicy : public Policy {
 public:
  std::vector<Choice> Choices(const Environment& env, AgentId agent,
                              const Inbox& inbox) const override;
};

// Hand-written Guessing Numbers convention: while fewer than N hints have
// been given, the acting agent hints the next agent the segment f(d) of an
// injective hint map; afterwards it reads its own hinted segment and
// guesses the digit f maps there.
class ScriptedGuessingPolicy : public Policy {
 public:
  // hint_map[k] is the segment for alphabet entry k.
  explicit ScriptedGuessingPolicy(std::vector<int> hint_map)
      : hint_map_(std::move(hint_map)) {}
  // Uses InjectiveHintMap; throws UnsupportedError when none exists.
  static ScriptedGuessingPolicy ForConfig(const guessing::GuessConfig& c);

  std::vector<Choice> Choices(const Environment& env, AgentId agent,
                              const Inbox& inbox) const override;

  const std::vector<int>& hint_map() const { return hint_map_; }

 private:
  std::vector<int> hint_map_;
};

// Monte Carlo rollouts on the same seed-derived episode set as Evaluate().
// Choices are sampled by their probabilities.
EvalSummary EvaluatePolicy(const Environment& prototype, const Policy& policy,
                           int episodes, uint64_t seed);

// One sampled episode from `env` reset with `seed`.
Episode PolicyRollout(Environment& env, const Policy& policy, uint64_t seed,
                      CounterRng& rng);

}  // namespace icp::learn

#endif  // ICP_LEARN_POLICY_H_
