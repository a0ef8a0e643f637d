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

#ifndef ICP_ENVS_GUESSING_H_
#define ICP_ENVS_GUESSING_H_

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "icp/core/environment.h"
#include "icp/core/rng.h"

namespace icp::guessing {

inline constexpr int kNumSegments = 7;
inline constexpr int kNumDigits = 10;
inline constexpr double kCorrectGuessReward = 10.0;
inline constexpr double kHintReward = -0.1;

// Seven-segment rendering of the ten digits, segments a..g = 0..6.
class SegmentTable {
 public:
  using Row = std::array<bool, kNumSegments>;

  // The conventional encoding: 0 lights a-f, 1 lights b,c, and so on.
  static SegmentTable Standard();
  explicit SegmentTable(std::array<Row, kNumDigits> rows) : rows_(rows) {}

  // Throws std::out_of_range for a digit outside [0,10) or a segment
  // outside [0,7).
  bool On(int digit, int segment) const;
  const Row& row(int digit) const { return rows_.at(digit); }

 private:
  std::array<Row, kNumDigits> rows_;
};

struct GuessConfig {
  int n_agents = 2;
  int hint_limit = 6;
  std::vector<int> digit_alphabet = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  bool distinct_digits = false;
  double gamma = 1.0;
  // 0 selects hint_limit + n_agents, the longest possible episode.
  int horizon = 0;

  void Validate() const;
  int EffectiveHorizon() const;
  int num_actions() const;
};

// Fact states stored per (agent, segment).
enum FactState : int32_t { kUnknown = 0, kOn = 1, kOff = 2 };

struct DecodedAction {
  bool is_guess = false;
  int digit = -1;    // guesses
  int target = -1;   // hints: absolute agent id
  int segment = -1;  // hints
};

// Turn-based: on every step exactly one agent (the one whose turn it is)
// either guesses its own hidden digit or reveals one segment of another
// agent's digit to everyone.
//
// Action ids: [0, |alphabet|) guess alphabet[i]; then for each target
// offset o in 1..N-1 (target = (actor + o) mod N) the seven segment hints.
//
// Observation payload for agent i:
//   [turn, hints_used, hint_limit,
//    then per agent j: digit (-1 for j == i), guessed, 7 fact states]
class GuessingEnv : public Environment {
 public:
  explicit GuessingEnv(GuessConfig config,
                       SegmentTable table = SegmentTable::Standard());

  const GuessConfig& config() const { return config_; }
  const SegmentTable& table() const { return table_; }

  ActionId GuessAction(int digit) const;
  ActionId HintAction(AgentId actor, AgentId target, int segment) const;
  DecodedAction Decode(AgentId actor, ActionId a) const;

  // Direct state access for tests and oracles.
  const std::vector<int>& digits() const { return digits_; }
  int hints_used() const { return hints_used_; }
  bool guessed(AgentId i) const { return guessed_.at(i); }
  bool correct(AgentId i) const { return correct_.at(i); }
  AgentId turn() const { return turn_; }
  int32_t fact(AgentId i, int segment) const {
    return facts_.at(i * kNumSegments + segment);
  }
  // Places the environment in the initial state with the given digits.
  void SetDigits(const std::vector<int>& digits);

  std::string name() const override { return "guessing"; }
  std::string ParamsString() const override;
  const EnvParams& params() const override { return params_; }
  int num_agents() const override { return config_.n_agents; }
  const ActionSpace& action_space() const override { return space_; }
  std::vector<Observation> Reset(uint64_t seed) override;
  bool IsTerminal() const override { return done_; }
  bool IsActing(AgentId agent) const override;
  std::vector<ActionId> LegalActions(AgentId agent) const override;
  Observation Observe(AgentId agent) const override;
  Observation ObserveGlobal(AgentId agent) const override;
  int step_count() const override { return step_; }
  uint64_t seed() const override { return seed_; }
  std::string StateKey() const override;
  std::unique_ptr<Environment> Clone() const override;

  // Context of a target: the index of its digit in the alphabet.
  int NumContexts() const override {
    return static_cast<int>(config_.digit_alphabet.size());
  }
  int ContextFromView(const Observation& viewer,
                      AgentId target) const override;
  int HiddenContext(AgentId target) const override;
  std::vector<WeightedInitialState> EnumerateInitialStates(
      size_t bound) const override;

 protected:
  Transition DoStep(const JointAction& joint) override;

 private:
  int AlphabetIndex(int digit) const;
  Observation MakeObservation(AgentId agent, bool global) const;
  void AdvanceTurn();

  GuessConfig config_;
  SegmentTable table_;
  EnvParams params_;
  ActionSpace space_;

  uint64_t seed_ = 0;
  CounterRng rng_;
  std::vector<int> digits_;
  std::vector<int32_t> facts_;  // n_agents x 7
  std::vector<bool> guessed_;
  std::vector<bool> correct_;
  int hints_used_ = 0;
  AgentId turn_ = 0;
  int step_ = 0;
  bool done_ = true;
};

}  // namespace icp::guessing

#endif  // ICP_ENVS_GUESSING_H_
