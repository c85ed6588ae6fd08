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

#ifndef MATLQL_MATLQL_HPP_
#define MATLQL_MATLQL_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matlql/agent.hpp"

namespace matlql {

// Evaluation update for the value of following advisor `ad`: a SARSA-style
// step toward r + gamma * highQ(s', others', ad). A terminal transition
// bootstraps nothing; its target is the reward alone. Returns the new value.
double UpdateHighQ(QTable& high, StateId s, long others_key, AdvisorId ad, double r,
                   StateId next_state, long next_others_key, double alpha, double gamma,
                   bool terminal);

// Control update for the agent's own action values: a Q-learning step toward
// r + gamma * max_a' lowQ(s', others', a'). Terminal target is r alone.
double UpdateLowQ(QTable& low, StateId s, long others_key, ActionId a, double r,
                  StateId next_state, long next_others_key, double alpha, double gamma,
                  bool terminal);

// Value of vote for the action recommended by `recommenders`: the best
// high-Q estimate among them enters unweighted, every other estimate is
// damped by 1/mu_s. With many visits the vote collapses to the single best
// advisor; with few visits head count dominates.
double ValueOfVote(const QTable& high, StateId s, long others_key,
                   const std::vector<AdvisorId>& recommenders, long mu_s);

// Groups the recommendations by action, scores each group with ValueOfVote,
// and returns the winning action together with the advisor whose estimate
// backs it (the one subsequently updated by the evaluation rule). Ties break
// toward the lowest action index and lowest advisor id.
std::pair<ActionId, AdvisorId> SelectAdvisorAction(const QTable& high, StateId s, long others_key,
                                                   const std::vector<ActionId>& recs, long mu_s);

enum class SelectionBranch { kAdvisorEnsemble, kAdvisorRandom, kRandom, kGreedy };

// Literal three-way split on the drawn uniforms: u < eps_prime defers to
// advisors (u_prime < eta: ensemble, otherwise a uniformly random advisor);
// eps_prime <= u < eps explores randomly; anything else is greedy.
SelectionBranch SelectBranch(double u, double u_prime, double eps_prime, double eps, double eta);

// Tabular two-level Q-learner: a joint-action-conditioned low table driving
// the greedy policy and a per-advisor high table driving advisor selection.
class MatlqlAgent : public Agent {
 public:
  MatlqlAgent(AgentId id, const Environment& env, LearnerOptions opts, int num_advisors);

  std::string algorithm() const override { return "matlql"; }

  long OthersKey(StateId s, const JointAction& last_executed) const override;
  void VisitState(StateId s) override { counters_.VisitState(s); }

  ActionChoice ChooseAdvisorAction(StateId s, long others_key, const std::vector<ActionId>& recs,
                                   Rng& rng) override;
  ActionId GreedyAction(StateId s, long others_key, Rng& rng) override;
  ActionId ExecutionAction(StateId s, long others_key) override;

  void ObserveStep(const StepRecord& rec) override;

  std::vector<std::string> CheckpointLines() const override;
  void RestoreCheckpoint(const std::string& text);

  const QTable& low_q() const { return low_; }
  const QTable& high_q() const { return high_; }
  QTable& mutable_low_q() { return low_; }
  QTable& mutable_high_q() { return high_; }
  const VisitCounters& counters() const { return counters_; }

 private:
  bool ImmediateUpdates() const;
  long NextOthersKey(StateId next_state) const;
  // Others' slice of the jointly greedy entry of the agent's own low table.
  long StageGreedyOthersKey(StateId s) const;
  void Flush(const StepRecord& rec, long next_others_key);

  long others_size_;
  QTable low_;
  QTable high_;
  VisitCounters counters_;
  std::optional<StepRecord> pending_;
};

}  // namespace matlql

#endif  // MATLQL_MATLQL_HPP_
