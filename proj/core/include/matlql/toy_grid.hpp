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

#ifndef MATLQL_TOY_GRID_HPP_
#define MATLQL_TOY_GRID_HPP_

#include <string>
#include <vector>

#include "matlql/env.hpp"

namespace matlql {

// Fixed six-state, two-action, single-agent grid:
//
//   S1 --R--> S2 --R--> G   (+1, terminal)
//    |         |
//    D         D
//    v         v
//   S3(-1)    S4(-1)         S5 exists only for symmetry and is unreachable.
//
// The only non-terminal transition (S1, R) -> S2 pays 0. Stepping from S5 or
// from a terminal state is a contract violation.
class ToyAdvisorGrid : public Environment {
 public:
  enum State : StateId { kS1 = 0, kS2 = 1, kS3 = 2, kS4 = 3, kS5 = 4, kGoal = 5 };
  enum Action : ActionId { kRight = 0, kDown = 1 };

  explicit ToyAdvisorGrid(double gamma = 0.9, int horizon = 10);

  std::string name() const override { return "toy-grid"; }
  int num_agents() const override { return 1; }
  int num_states() const override { return 6; }
  const JointActionSpace& action_space() const override { return space_; }
  double discount() const override { return gamma_; }
  double reward_bound() const override { return 1.0; }
  int episode_horizon() const override { return horizon_; }

  bool IsTerminal(StateId s) const override { return s == kS3 || s == kS4 || s == kGoal; }
  bool IsStartable(StateId s) const override { return s == kS1 || s == kS2; }

  StateId Reset(Rng& rng) override;
  StepOutcome Step(StateId s, const JointAction& ja, Rng& rng) override;

  // Single-agent convenience used by tests and the reference-trace replay.
  StepOutcome StepAction(StateId s, ActionId a);

  static std::string StateName(StateId s);

 private:
  JointActionSpace space_;
  double gamma_;
  int horizon_;
};

// Model view of the same dynamics for the fixed-point oracle.
class ToyAdvisorGridModel : public EnumerableModel {
 public:
  std::vector<double> ExpectedRewards(StateId s, const JointAction& ja) const override;
  std::vector<Successor> Transitions(StateId s, const JointAction& ja) const override;
};

}  // namespace matlql

#endif  // MATLQL_TOY_GRID_HPP_
