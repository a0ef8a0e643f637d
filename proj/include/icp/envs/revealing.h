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

#ifndef ICP_ENVS_REVEALING_H_
#define ICP_ENVS_REVEALING_H_

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "icp/core/environment.h"
#include "icp/core/rng.h"

namespace icp::revealing {

enum Direction : int { kUp = 0, kDown = 1, kLeft = 2, kRight = 3 };
inline constexpr int kNumDirections = 4;
inline constexpr int kNumActions = 8;

// Actions 0..3 move, 4..7 reveal the adjacent cell; both indexed by
// Direction.
inline constexpr ActionId MoveAction(Direction d) { return d; }
inline constexpr ActionId RevealAction(Direction d) {
  return kNumDirections + d;
}

struct Cell {
  int x = 0;
  int y = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// Up decreases y, left decreases x, all modulo h.
Cell TorusAdjacent(Cell c, Direction d, int h);
// Signed offset along one axis, in (-h/2, h/2].
int TorusOffset(int from, int to, int h);
int TorusDistance(Cell a, Cell b, int h);
// Dominant axis of the offset from `from` to `to`; ties go horizontal.
Direction DirectionClass(Cell from, Cell to, int h);

struct RevealConfig {
  int n_agents = 2;
  int grid = 3;
  int horizon = 20;
  double gamma = 1.0;

  void Validate() const;
};

// known_bits entries.
enum KnownBit : int32_t { kBitUnknown = 0, kGoalHere = 1, kGoalNotHere = 2 };

// Simultaneous-move grid world on an H x H torus. Every agent sees all
// positions and the goals of the others but not its own goal.
//
// Observation payload for agent i:
//   [t, then per agent j: x, y, goal x, goal y (-1, -1 for j == i),
//    then the previous joint action (N entries, -1 before the first step),
//    then H*H revealed flags, then H*H known bits of agent i]
//
// The compact payload keeps what a tabular learner needs:
//   [global, own goal dx, dy (or 99, 99 when unknown), own last move
//    (4 when none), mask of adjacent cells holding another agent's goal,
//    then the direction class of each other agent's goal, in order
//    i+1, i+2, ...]
class RevealingEnv : public Environment {
 public:
  explicit RevealingEnv(RevealConfig config);

  const RevealConfig& config() const { return config_; }
  Cell position(AgentId i) const { return positions_.at(i); }
  Cell goal(AgentId i) const { return goals_.at(i); }
  bool revealed(Cell c) const { return revealed_.at(Index(c)) != 0; }
  int32_t known(AgentId i, Cell c) const {
    return known_.at(i).at(Index(c));
  }
  int goals_reached() const { return goals_reached_; }
  // Places the environment in an initial state with the given layout.
  void SetLayout(const std::vector<Cell>& positions,
                 const std::vector<Cell>& goals);

  std::string name() const override { return "revealing"; }
  std::string ParamsString() const override;
  const EnvParams& params() const override { return params_; }
  int num_agents() const override { return config_.n_agents; }
  const ActionSpace& action_space() const override { return space_; }
  std::vector<Observation> Reset(uint64_t seed) override;
  bool IsTerminal() const override { return t_ >= config_.horizon; }
  bool IsActing(AgentId agent) const override;
  std::vector<ActionId> LegalActions(AgentId agent) const override;
  Observation Observe(AgentId agent) const override;
  Observation ObserveGlobal(AgentId agent) const override;
  int step_count() const override { return t_; }
  uint64_t seed() const override { return seed_; }
  std::string StateKey() const override;
  std::unique_ptr<Environment> Clone() const override;

  std::vector<int32_t> CompactPayload(const Observation& obs) const override;

  // Context of a target: DirectionClass(target position, target goal).
  int NumContexts() const override { return kNumDirections; }
  int ContextFromView(const Observation& viewer,
                      AgentId target) const override;
  int HiddenContext(AgentId target) const override;

 protected:
  Transition DoStep(const JointAction& joint) override;

 private:
  int Index(Cell c) const;
  Cell DrawGoal(Cell from);
  Observation MakeObservation(AgentId agent, bool global) const;

  RevealConfig config_;
  EnvParams params_;
  ActionSpace space_;

  uint64_t seed_ = 0;
  CounterRng rng_;
  std::vector<Cell> positions_;
  std::vector<Cell> goals_;
  std::vector<std::vector<int32_t>> known_;
  std::vector<int32_t> revealed_;
  std::vector<ActionId> last_joint_;
  int goals_reached_ = 0;
  int t_ = 0;
};

}  // namespace icp::revealing

#endif  // ICP_ENVS_REVEALING_H_
