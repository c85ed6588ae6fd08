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

#ifndef MATLQL_MATRIX_GAME_HPP_
#define MATLQL_MATRIX_GAME_HPP_

#include <string>
#include <vector>

#include "matlql/env.hpp"

namespace matlql {

// Stage-game environment: per-state payoff tensors plus a successor table.
// The single-state variant loops on itself until the configured horizon.
struct MatrixGameSpec {
  std::vector<int> action_sizes;
  int num_states = 1;
  // rewards[s][joint_index][agent].
  std::vector<std::vector<std::vector<double>>> rewards;
  // successors[s][joint_index]; an empty distribution means self-loop.
  std::vector<std::vector<std::vector<EnumerableModel::Successor>>> successors;
  std::vector<bool> terminal;  // empty means no terminal states
  StateId start = 0;
  double gamma = 0.9;
  int horizon = 100;  // 0 = unbounded
  std::string label = "matrix-game";

  // Convenience for deterministic chains: one successor per joint action.
  void SetDeterministicSuccessor(StateId s, long joint_index, StateId next);
};

class MatrixGameEnv : public Environment, public EnumerableModel {
 public:
  explicit MatrixGameEnv(MatrixGameSpec spec);

  std::string name() const override { return spec_.label; }
  int num_agents() const override { return space_.num_agents(); }
  int num_states() const override { return spec_.num_states; }
  const JointActionSpace& action_space() const override { return space_; }
  double discount() const override { return spec_.gamma; }
  double reward_bound() const override { return reward_bound_; }
  int episode_horizon() const override { return spec_.horizon; }

  bool IsTerminal(StateId s) const override;
  StateId Reset(Rng& rng) override;
  StepOutcome Step(StateId s, const JointAction& ja, Rng& rng) override;

  std::vector<double> ExpectedRewards(StateId s, const JointAction& ja) const override;
  std::vector<Successor> Transitions(StateId s, const JointAction& ja) const override;

  const MatrixGameSpec& spec() const { return spec_; }

 private:
  MatrixGameSpec spec_;
  JointActionSpace space_;
  double reward_bound_ = 0.0;
};

// Parses the single-state tensor format: one line per joint action,
// "a1 a2 ... aN : r1 r2 ... rN", '#' comments allowed. Every joint action
// must be covered exactly once.
MatrixGameSpec LoadMatrixGameFile(const std::string& path, double gamma = 0.9, int horizon = 100);
MatrixGameSpec ParseMatrixGameText(const std::string& text, double gamma = 0.9, int horizon = 100);

// Named stage-game constructions used by experiments and tests.

// Single-state identical-interest 2x2 game: both agents are paid
// `best_reward` at joint action (0, 0) and 0 elsewhere.
MatrixGameSpec MakeCoordination2x2(double best_reward = 1.0, double gamma = 0.9, int horizon = 100);

// Deterministic 3-state, 2-agent, 2-action identical-interest chain. Each
// state has a unique best joint action, and the successor depends on the
// joint action, so the fixed point couples all three states. Unbounded
// horizon: intended for continuing-task training runs.
MatrixGameSpec MakeCooperativeChain3(double gamma = 0.75);

// Single-state zero-sum matching pennies (no pure saddle point).
MatrixGameSpec MakeMatchingPennies(double gamma = 0.9, int horizon = 100);

}  // namespace matlql

#endif  // MATLQL_MATRIX_GAME_HPP_
