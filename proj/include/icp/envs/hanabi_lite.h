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

#ifndef ICP_ENVS_HANABI_LITE_H_
#define ICP_ENVS_HANABI_LITE_H_

#include <memory>
#include <string>
#include <vector>

#include "icp/core/environment.h"
#include "icp/core/rng.h"

namespace icp::hanabi {

struct HanabiLiteConfig {
  int colors = 2;
  int max_rank = 3;
  // Copies of each rank per color, rank 1 first.
  std::vector<int> rank_counts = {3, 2, 1};
  int players = 3;
  int hand_size = 2;
  int hint_tokens = 3;
  int lives = 2;
  double gamma = 1.0;
  // 0 selects a bound no game can exceed.
  int horizon = 0;

  void Validate() const;
  int deck_size() const;
  int num_card_types() const { return colors * max_rank; }
  int num_actions() const;
  int EffectiveHorizon() const;
};

enum class Move { kPlay, kDiscard, kHintColor, kHintRank };

struct DecodedMove {
  Move move = Move::kPlay;
  int slot = -1;    // play and discard
  int target = -1;  // hints: absolute player id
  int color = -1;
  int rank = -1;    // 1-based
};

// Public knowledge about one hand slot.
struct CardKnowledge {
  int color = -1;  // -1 until hinted
  int rank = -1;
  int32_t not_colors = 0;  // bit c: known not color c
  int32_t not_ranks = 0;   // bit r-1: known not rank r

  bool FullyKnown() const { return color >= 0 && rank >= 0; }
  friend bool operator==(const CardKnowledge&,
                         const CardKnowledge&) = default;
};

// Cards are identified by type = color * max_rank + (rank - 1).
//
// Action ids for the acting player: [0, h) play slot, [h, 2h) discard slot,
// then for each target offset o in 1..P-1 the C color hints followed by the
// R rank hints. Hints are the scouting actions.
//
// Observation payload for player i:
//   [turn, tokens, lives, deck size, final turns left (-1 before the deck
//    runs out), fireworks (C entries),
//    then per player j: hand size and hand_size slots of
//      (card type, known color, known rank, not-colors, not-ranks)
//      with card type -1 for i's own cards and for empty slots,
//    then discard counts per card type]
class HanabiLiteEnv : public Environment {
 public:
  explicit HanabiLiteEnv(HanabiLiteConfig config);

  const HanabiLiteConfig& config() const { return config_; }
  int CardColor(int type) const { return type / config_.max_rank; }
  int CardRank(int type) const { return type % config_.max_rank + 1; }

  DecodedMove Decode(AgentId actor, ActionId a) const;
  ActionId PlayAction(int slot) const;
  ActionId DiscardAction(int slot) const;
  ActionId HintColorAction(AgentId actor, AgentId target, int color) const;
  ActionId HintRankAction(AgentId actor, AgentId target, int rank) const;

  const std::vector<int>& deck() const { return deck_; }
  const std::vector<int>& hand(AgentId p) const { return hands_.at(p); }
  const std::vector<CardKnowledge>& knowledge(AgentId p) const {
    return knowledge_.at(p);
  }
  const std::vector<int>& fireworks() const { return fireworks_; }
  const std::vector<int>& discards() const { return discards_; }
  int tokens() const { return tokens_; }
  int lives() const { return lives_; }
  AgentId turn() const { return turn_; }
  int Score() const;
  // Places the environment in an initial state: the deck is dealt from the
  // back, player 0 first.
  void SetDeck(const std::vector<int>& deck);
  // Exchanges a hand card with a deck card, keeping the slot's knowledge.
  void SwapWithDeck(AgentId p, int slot, int deck_index);
  // Exchanges two cards of one hand, keeping each slot's knowledge.
  void SwapSlots(AgentId p, int a, int b);

  std::string name() const override { return "hanabi_lite"; }
  std::string ParamsString() const override;
  const EnvParams& params() const override { return params_; }
  int num_agents() const override { return config_.players; }
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

  // Context of a target: type of its oldest card that is not fully known,
  // or C*R when every card is known.
  int NumContexts() const override { return config_.num_card_types() + 1; }
  int ContextFromView(const Observation& viewer,
                      AgentId target) const override;
  int HiddenContext(AgentId target) const override;

 protected:
  Transition DoStep(const JointAction& joint) override;

 private:
  Observation MakeObservation(AgentId agent, bool global) const;
  bool HintMatches(AgentId target, const DecodedMove& m) const;
  void RemoveAndDraw(AgentId p, int slot);

  HanabiLiteConfig config_;
  EnvParams params_;
  ActionSpace space_;

  uint64_t seed_ = 0;
  CounterRng rng_;
  std::vector<int> deck_;
  std::vector<std::vector<int>> hands_;
  std::vector<std::vector<CardKnowledge>> knowledge_;
  std::vector<int> fireworks_;
  std::vector<int> discards_;  // card types, in discard order
  int tokens_ = 0;
  int lives_ = 0;
  AgentId turn_ = 0;
  int final_turns_ = -1;
  int step_ = 0;
  bool done_ = true;
};

}  // namespace icp::hanabi

#endif  // ICP_ENVS_HANABI_LITE_H_
