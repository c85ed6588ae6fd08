// Copyright 2026 The matlql Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATLQL_GRIDWORLD_HPP_
#define MATLQL_GRIDWORLD_HPP_

#include <string>
#include <vector>

#include "matlql/env.hpp"

namespace matlql {

enum class GridMode {
  kDuel,     // agent 0 tags agent 1; zero-sum terminal reward
  kPursuit,  // two pursuers corner a scripted evader; shared rewards
};

struct GridworldSpec {
  int width = 3;
  int height = 3;
  GridMode mode = GridMode::kDuel;
  // Duel: {tagger, opponent}. Pursuit: {pursuer 0, pursuer 1, evader}.
  std::vector<int> start_cells;
  int horizon = 50;
  double gamma = 0.9;
  double tag_reward = 1.0;          // duel terminal reward (+/-)
  double pursuit_tag_reward = 0.1;  // >=1 pursuer adjacent to the evader
  double capture_reward = 1.0;      // both pursuers adjacent (terminal)
  double step_penalty = 0.0;        // added to every agent every step
};

// Multi-agent gridworld with simultaneous moves. Moves into a wall clamp to
// the current cell; two agents moving into the same cell both stay in place.
// The duel tag triggers when the tagger's move lands on the opponent's new
// or old cell. The pursuit evader is part of the environment and moves
// uniformly at random; capture means both pursuers are within Manhattan
// distance 1 of the evader.
class GridworldEnv : public Environment {
 public:
  enum Action : ActionId { kStay = 0, kUp = 1, kDown = 2, kLeft = 3, kRight = 4 };
  static constexpr int kNumActions = 5;

  explicit GridworldEnv(GridworldSpec spec);

  std::string name() const override;
  int num_agents() const override { return 2; }
  int num_states() const override { return num_states_; }
  const JointActionSpace& action_space() const override { return space_; }
  double discount() const override { return spec_.gamma; }
  double reward_bound() const override;
  int episode_horizon() const override { return spec_.horizon; }

  bool IsTerminal(StateId s) const override;
  StateId Reset(Rng& rng) override;
  StepOutcome Step(StateId s, const JointAction& ja, Rng& rng) override;

  const GridworldSpec& spec() const { return spec_; }
  int num_cells() const { return spec_.width * spec_.height; }

  // Geometry helpers shared with the rule advisors.
  int MoveFrom(int cell, ActionId action) const;  // wall-clamped
  int Manhattan(int a, int b) const;
  int OwnCell(AgentId agent, StateId s) const;
  // Duel: the other agent's cell. Pursuit: the evader's cell.
  int TargetCell(AgentId agent, StateId s) const;

  StateId EncodeDuel(int tagger, int opponent) const;
  StateId EncodePursuit(int p0, int p1, int evader) const;

 private:
  StepOutcome StepDuel(StateId s, const JointAction& ja);
  StepOutcome StepPursuit(StateId s, const JointAction& ja, Rng& rng);
  bool PursuitCaptured(int p0, int p1, int evader) const;

  GridworldSpec spec_;
  JointActionSpace space_;
  int num_states_;
};

}  // namespace matlql

#endif  // MATLQL_GRIDWORLD_HPP_
