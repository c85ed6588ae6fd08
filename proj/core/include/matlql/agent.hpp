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

#ifndef MATLQL_AGENT_HPP_
#define MATLQL_AGENT_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matlql/advisors.hpp"
#include "matlql/env.hpp"
#include "matlql/rng.hpp"
#include "matlql/schedules.hpp"
#include "matlql/tables.hpp"

namespace matlql {

enum class ActionSource { kAdvisorEnsemble, kAdvisorRandom, kRandom, kGreedy, kScripted };

struct ActionChoice {
  ActionId action = 0;
  ActionSource source = ActionSource::kGreedy;
  AdvisorId advisor = kNoAdvisor;
};

// How an agent resolves the joint action of the other agents for table keys
// it cannot observe directly at decision/update time.
//   kObservedDelay: use the actually executed actions, which for update
//     targets means applying each update one step late.
//   kGreedyCopies: read the next joint action off the agent's own table as
//     the jointly greedy configuration (suited to identical-interest games).
enum class JointResolution { kObservedDelay, kGreedyCopies };

struct LearnerOptions {
  double gamma = 0.9;
  double eta = 0.9;
  LearningRateSchedule rate = LearningRateSchedule::Constant(0.1);
  JointResolution resolution = JointResolution::kObservedDelay;
  double actor_rate = 0.01;  // tabular-softmax actors only
};

// One executed transition as seen by a single agent. `alpha` is filled in by
// the agent itself once the pair counter for this visit is known.
struct StepRecord {
  StateId state = 0;
  JointAction joint_action;
  double reward = 0.0;
  StateId next_state = 0;
  bool terminal = false;
  AdvisorId followed_advisor = kNoAdvisor;
  double alpha = 0.0;
};

// A participant in the training loop. The loop owns branch selection
// (advisor / random / greedy) and hands the drawn uniforms to the agent;
// agents own their tables, counters, and update rules.
class Agent {
 public:
  Agent(AgentId id, const Environment& env, LearnerOptions opts)
      : id_(id), env_(env), opts_(opts) {}
  virtual ~Agent() = default;

  AgentId id() const { return id_; }
  const LearnerOptions& options() const { return opts_; }
  virtual std::string algorithm() const = 0;

  // Scripted agents bypass exploration and learning entirely.
  virtual bool scripted() const { return false; }

  void AddAdvisor(std::unique_ptr<Advisor> advisor) { advisors_.push_back(std::move(advisor)); }
  int num_advisors() const { return static_cast<int>(advisors_.size()); }
  bool has_advisors() const { return !advisors_.empty(); }
  Advisor& advisor(AdvisorId k) { return *advisors_[k]; }
  const Advisor& advisor(AdvisorId k) const { return *advisors_[k]; }

  // Selection-time estimate of the other agents' joint-action key at `s`.
  virtual long OthersKey(StateId s, const JointAction& last_executed) const {
    if (env_.num_agents() == 1) return 0;
    return env_.action_space().OthersIndex(last_executed, id_);
  }

  // Called once per training step on arrival at `s`, before any selection.
  virtual void VisitState(StateId /*s*/) {}

  // Advisor-branch selection given every advisor's recommendation.
  virtual ActionChoice ChooseAdvisorAction(StateId s, long others_key,
                                           const std::vector<ActionId>& recs, Rng& rng) = 0;
  // Greedy branch during training (tabular learners: argmax; actor learners:
  // a policy sample).
  virtual ActionId GreedyAction(StateId s, long others_key, Rng& rng) = 0;
  // Frozen execution-phase action.
  virtual ActionId ExecutionAction(StateId s, long others_key) = 0;
  virtual ActionChoice ScriptedAction(StateId /*s*/, Rng& /*rng*/) {
    throw ContractViolation("agent is not scripted");
  }

  virtual void ObserveStep(const StepRecord& rec) = 0;

  virtual std::vector<std::string> CheckpointLines() const = 0;
  std::string Checkpoint() const { return JoinCheckpointLines(CheckpointLines()); }

 protected:
  const Environment& env() const { return env_; }

  AgentId id_;
  const Environment& env_;
  LearnerOptions opts_;
  std::vector<std::unique_ptr<Advisor>> advisors_;
};

}  // namespace matlql

#endif  // MATLQL_AGENT_HPP_
