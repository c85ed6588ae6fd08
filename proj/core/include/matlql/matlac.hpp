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

#ifndef MATLQL_MATLAC_HPP_
#define MATLQL_MATLAC_HPP_

#include <optional>
#include <string>
#include <vector>

#include "matlql/agent.hpp"

namespace matlql {

// Softmax probabilities over the slot axis of a logits row. Numerically
// stabilized; always sums to 1 up to rounding.
std::vector<double> SoftmaxRow(const QTable& logits, StateId s);
int SampleSoftmaxSlot(const QTable& logits, StateId s, Rng& rng);

// Critic TD target. Low level bootstraps max over own actions; high level
// bootstraps the followed advisor's value. Terminal target is r alone.
double CriticTarget(const QTable& critic, bool high_level, double r, StateId next_state,
                    long next_others_key, int next_slot, double gamma, bool terminal);

// Advantage of the realized target against the policy-weighted critic mean.
double Advantage(double y, const QTable& critic, StateId s, long others_key,
                 const std::vector<double>& policy);

// Gradient-ascent step on advantage-weighted log-likelihood for a softmax
// parameterization: logit(s, b) += rate * A * (1[b == chosen] - pi(b|s)).
void ActorUpdate(QTable& logits, StateId s, int chosen_slot, double advantage, double rate);

// Two-level tabular actor-critic. Critics condition on the other agents'
// joint action; actors condition on the state alone, so execution needs only
// local information.
class MatlacAgent : public Agent {
 public:
  MatlacAgent(AgentId id, const Environment& env, LearnerOptions opts, int num_advisors);

  std::string algorithm() const override { return "matlac"; }

  void VisitState(StateId s) override { counters_.VisitState(s); }

  ActionChoice ChooseAdvisorAction(StateId s, long others_key, const std::vector<ActionId>& recs,
                                   Rng& rng) override;
  // During training the greedy branch samples the low-level actor; execution
  // takes its argmax.
  ActionId GreedyAction(StateId s, long others_key, Rng& rng) override;
  ActionId ExecutionAction(StateId s, long others_key) override;

  void ObserveStep(const StepRecord& rec) override;

  std::vector<std::string> CheckpointLines() const override;

  const QTable& low_actor() const { return low_actor_; }
  const QTable& high_actor() const { return high_actor_; }
  const QTable& low_critic() const { return low_critic_; }
  const QTable& high_critic() const { return high_critic_; }

 private:
  bool ImmediateUpdates() const;
  long NextOthersKey(StateId next_state) const;
  void Flush(const StepRecord& rec, long next_others_key);

  long others_size_;
  QTable low_actor_;   // (state, action) logits
  QTable high_actor_;  // (state, advisor) logits
  QTable low_critic_;
  QTable high_critic_;
  VisitCounters counters_;
  std::optional<StepRecord> pending_;
};

}  // namespace matlql

#endif  // MATLQL_MATLAC_HPP_
