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

#include "matlql/toy_grid.hpp"

namespace matlql {
namespace {

struct Cell {
  StateId next;
  double reward;
};

// Row = non-terminal state (S1, S2), column = action (R, D).
Cell Lookup(StateId s, ActionId a) {
  if (s == ToyAdvisorGrid::kS1) {
    return a == ToyAdvisorGrid::kRight ? Cell{ToyAdvisorGrid::kS2, 0.0}
                                       : Cell{ToyAdvisorGrid::kS3, -1.0};
  }
  return a == ToyAdvisorGrid::kRight ? Cell{ToyAdvisorGrid::kGoal, 1.0}
                                     : Cell{ToyAdvisorGrid::kS4, -1.0};
}

}  // namespace

ToyAdvisorGrid::ToyAdvisorGrid(double gamma, int horizon)
    : space_({2}), gamma_(gamma), horizon_(horizon) {}

StateId ToyAdvisorGrid::Reset(Rng& /*rng*/) {
  ResetHorizonCounter();
  return kS1;
}

StepOutcome ToyAdvisorGrid::Step(StateId s, const JointAction& ja, Rng& /*rng*/) {
  CheckStepPreconditions(s, ja);
  if (s == kS5) {
    throw ContractViolation("S5 is unreachable; stepping from it is not defined");
  }
  Cell cell = Lookup(s, ja[0]);
  bool capped = CountStepAgainstHorizon();
  return StepOutcome{cell.next, {cell.reward}, IsTerminal(cell.next) || capped};
}

StepOutcome ToyAdvisorGrid::StepAction(StateId s, ActionId a) {
  Rng unused(0);
  return Step(s, {a}, unused);
}

std::string ToyAdvisorGrid::StateName(StateId s) {
  static const char* kNames[] = {"S1", "S2", "S3", "S4", "S5", "G"};
  return kNames[s];
}

// S5 has no defined dynamics; the model treats it as a zero-reward self-loop
// so fixed-point sweeps assign it a value of zero.
std::vector<double> ToyAdvisorGridModel::ExpectedRewards(StateId s, const JointAction& ja) const {
  if (s == ToyAdvisorGrid::kS5) return {0.0};
  return {Lookup(s, ja[0]).reward};
}

std::vector<EnumerableModel::Successor> ToyAdvisorGridModel::Transitions(
    StateId s, const JointAction& ja) const {
  if (s == ToyAdvisorGrid::kS5) return {{s, 1.0}};
  return {{Lookup(s, ja[0]).next, 1.0}};
}

}  // namespace matlql
