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

#ifndef MATLQL_ENV_HPP_
#define MATLQL_ENV_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "matlql/rng.hpp"
#include "matlql/types.hpp"

namespace matlql {

// An enumerable-state, joint-action, N-agent stochastic game with per-agent
// rewards. Transitions are a pure function of (state, joint action, rng
// stream); the only internal mutable state is the episode step counter used
// to enforce the configured horizon.
//
// Instances are single-owner, single-threaded objects. Independent instances
// may run on independent threads with independent rng streams.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual std::string name() const = 0;
  virtual int num_agents() const = 0;
  virtual int num_states() const = 0;
  virtual const JointActionSpace& action_space() const = 0;
  virtual double discount() const = 0;
  // Per-agent bound on |reward| for any single step.
  virtual double reward_bound() const = 0;
  // Step cap per episode; 0 means unbounded.
  virtual int episode_horizon() const = 0;

  virtual bool IsTerminal(StateId s) const = 0;
  // States an episode (or a covering-time trial) may start from. Excludes
  // terminal states and states that are represented but never entered.
  virtual bool IsStartable(StateId s) const { return !IsTerminal(s); }

  // Starts a new episode and returns the initial state.
  virtual StateId Reset(Rng& rng) = 0;
  virtual StepOutcome Step(StateId s, const JointAction& ja, Rng& rng) = 0;

 protected:
  void CheckStepPreconditions(StateId s, const JointAction& ja) const;

  // Horizon bookkeeping shared by the concrete environments: returns true
  // when this step hits the configured cap.
  bool CountStepAgainstHorizon();
  void ResetHorizonCounter() { steps_this_episode_ = 0; }

 private:
  int steps_this_episode_ = 0;
};

// Exact model access for environments whose dynamics are small enough to
// enumerate. Needed by the fixed-point oracle.
class EnumerableModel {
 public:
  virtual ~EnumerableModel() = default;

  struct Successor {
    StateId state;
    double probability;
  };

  virtual std::vector<double> ExpectedRewards(StateId s, const JointAction& ja) const = 0;
  virtual std::vector<Successor> Transitions(StateId s, const JointAction& ja) const = 0;
};

// All (state, joint action) pairs of `env` in canonical order: state-major,
// joint actions in mixed-radix lexicographic order.
std::vector<std::pair<StateId, JointAction>> EnumerateStateJointActions(const Environment& env);

}  // namespace matlql

#endif  // MATLQL_ENV_HPP_
