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

#ifndef MATLQL_BASELINES_HPP_
#define MATLQL_BASELINES_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matlql/agent.hpp"

namespace matlql {

// Synchronization step of the two-level baseline: the followed advisor's
// high value is overwritten with the low value of the executed action, and
// the reserved last slot (the learner's own policy) tracks max_a lowQ. The
// low table must already be updated for (s, executed).
void TlqlSync(const QTable& low, QTable& high, StateId s, long others_key, ActionId executed,
              AdvisorId followed);

// Vanilla single-agent Bellman update; terminal target is r alone.
double IndependentQUpdate(QTable& table, StateId s, ActionId a, double r, StateId next_state,
                          double alpha, double gamma, bool terminal);

// Samples an action with probability proportional to the number of advisors
// recommending it.
ActionId WeightedRandomAdvisorAction(const std::vector<ActionId>& recs, Rng& rng);

// Two-level Q-learning baseline: joint-action-free tables, advisor selection
// by plain argmax over the high table, and high values maintained by the
// synchronization step instead of an explicit evaluation update.
class TlqlAgent : public Agent {
 public:
  TlqlAgent(AgentId id, const Environment& env, LearnerOptions opts, int num_advisors);

  std::string algorithm() const override { return "tlql"; }

  ActionChoice ChooseAdvisorAction(StateId s, long others_key, const std::vector<ActionId>& recs,
                                   Rng& rng) override;
  ActionId GreedyAction(StateId s, long others_key, Rng& rng) override;
  ActionId ExecutionAction(StateId s, long others_key) override;
  long OthersKey(StateId, const JointAction&) const override { return 0; }

  void ObserveStep(const StepRecord& rec) override;

  std::vector<std::string> CheckpointLines() const override;

  const QTable& low_q() const { return low_; }
  const QTable& high_q() const { return high_; }

 private:
  QTable low_;
  QTable high_;  // advisors plus the reserved own-policy slot
  VisitCounters counters_;
};

// Which of the three mechanisms separating the multi-agent two-level learner
// from the baseline are enabled: joint-action keys, the ensemble vote, and
// the advisor-evaluation update.
struct AblationFlags {
  bool joint_action = true;
  bool ensemble = true;
  bool advisor_eval = true;
};

// Baseline learner with each mechanism individually switchable. All three
// flags on reproduces the multi-agent two-level learner step for step; all
// three off reproduces the vanilla baseline.
class AblationAgent : public Agent {
 public:
  AblationAgent(AgentId id, const Environment& env, LearnerOptions opts, int num_advisors,
                AblationFlags flags);

  std::string algorithm() const override;
  const AblationFlags& flags() const { return flags_; }

  long OthersKey(StateId s, const JointAction& last_executed) const override;
  void VisitState(StateId s) override { counters_.VisitState(s); }

  ActionChoice ChooseAdvisorAction(StateId s, long others_key, const std::vector<ActionId>& recs,
                                   Rng& rng) override;
  ActionId GreedyAction(StateId s, long others_key, Rng& rng) override;
  ActionId ExecutionAction(StateId s, long others_key) override;

  void ObserveStep(const StepRecord& rec) override;

  std::vector<std::string> CheckpointLines() const override;

  const QTable& low_q() const { return low_; }
  const QTable& high_q() const { return high_; }
  QTable& mutable_low_q() { return low_; }

 private:
  bool ImmediateUpdates() const;
  long StageGreedyOthersKey(StateId s) const;
  void Flush(const StepRecord& rec, long next_others_key);

  AblationFlags flags_;
  int num_advisors_;
  long others_size_;  // 1 when joint-action keys are disabled
  QTable low_;
  QTable high_;
  VisitCounters counters_;
  std::optional<StepRecord> pending_;
};

std::unique_ptr<AblationAgent> BuildAblationLearner(AgentId id, const Environment& env,
                                                    LearnerOptions opts, int num_advisors,
                                                    AblationFlags flags);

// Independent Q-learner (no advisors).
class IndependentQAgent : public Agent {
 public:
  IndependentQAgent(AgentId id, const Environment& env, LearnerOptions opts);

  std::string algorithm() const override { return "independent-q"; }

  ActionChoice ChooseAdvisorAction(StateId, long, const std::vector<ActionId>&, Rng&) override {
    throw ContractViolation("independent-q has no advisors");
  }
  ActionId GreedyAction(StateId s, long others_key, Rng& rng) override;
  ActionId ExecutionAction(StateId s, long others_key) override;
  long OthersKey(StateId, const JointAction&) const override { return 0; }

  void ObserveStep(const StepRecord& rec) override;

  std::vector<std::string> CheckpointLines() const override;

  const QTable& table() const { return low_; }

 private:
  QTable low_;
  VisitCounters counters_;
};

// Independent Q-learner that, when deferring to advisors, executes a
// head-count-weighted random recommendation. Stands in for single-advisor
// reuse baselines generalized to advisor sets.
class WeightedAdvisorAgent : public Agent {
 public:
  WeightedAdvisorAgent(AgentId id, const Environment& env, LearnerOptions opts);

  std::string algorithm() const override { return "weighted-advisor"; }

  ActionChoice ChooseAdvisorAction(StateId s, long others_key, const std::vector<ActionId>& recs,
                                   Rng& rng) override;
  ActionId GreedyAction(StateId s, long others_key, Rng& rng) override;
  ActionId ExecutionAction(StateId s, long others_key) override;
  long OthersKey(StateId, const JointAction&) const override { return 0; }

  void ObserveStep(const StepRecord& rec) override;

  std::vector<std::string> CheckpointLines() const override;

 private:
  QTable low_;
  VisitCounters counters_;
};

// Non-learning opponent driven by a fixed policy.
class FixedPolicyAgent : public Agent {
 public:
  FixedPolicyAgent(AgentId id, const Environment& env, std::unique_ptr<Advisor> policy);

  std::string algorithm() const override { return "fixed-opponent"; }
  bool scripted() const override { return true; }

  ActionChoice ScriptedAction(StateId s, Rng& rng) override;
  ActionChoice ChooseAdvisorAction(StateId, long, const std::vector<ActionId>&, Rng&) override {
    throw ContractViolation("scripted agent");
  }
  ActionId GreedyAction(StateId, long, Rng&) override {
    throw ContractViolation("scripted agent");
  }
  ActionId ExecutionAction(StateId, long) override { throw ContractViolation("scripted agent"); }

  void ObserveStep(const StepRecord&) override {}
  std::vector<std::string> CheckpointLines() const override { return {}; }

 private:
  std::unique_ptr<Advisor> policy_;
};

}  // namespace matlql

#endif  // MATLQL_BASELINES_HPP_
