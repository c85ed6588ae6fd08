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

#include "matlql/matlac.hpp"

#include <algorithm>
#include <cmath>

namespace matlql {

std::vector<double> SoftmaxRow(const QTable& logits, StateId s) {
  int n = logits.num_slots();
  std::vector<double> probs(n);
  double max_logit = logits.Get(s, 0, 0);
  for (int b = 1; b < n; ++b) max_logit = std::max(max_logit, logits.Get(s, 0, b));
  double sum = 0.0;
  for (int b = 0; b < n; ++b) {
    probs[b] = std::exp(logits.Get(s, 0, b) - max_logit);
    sum += probs[b];
  }
  for (double& p : probs) p /= sum;
  return probs;
}

int SampleSoftmaxSlot(const QTable& logits, StateId s, Rng& rng) {
  std::vector<double> probs = SoftmaxRow(logits, s);
  double u = rng.Uniform();
  double acc = 0.0;
  for (int b = 0; b < static_cast<int>(probs.size()); ++b) {
    acc += probs[b];
    if (u < acc) return b;
  }
  return static_cast<int>(probs.size()) - 1;
}

double CriticTarget(const QTable& critic, bool high_level, double r, StateId next_state,
                    long next_others_key, int next_slot, double gamma, bool terminal) {
  if (terminal) return r;
  double bootstrap = high_level ? critic.Get(next_state, next_others_key, next_slot)
                                : critic.MaxOverSlots(next_state, next_others_key);
  return r + gamma * bootstrap;
}

double Advantage(double y, const QTable& critic, StateId s, long others_key,
                 const std::vector<double>& policy) {
  double mean = 0.0;
  for (int b = 0; b < critic.num_slots(); ++b) {
    mean += policy[b] * critic.Get(s, others_key, b);
  }
  return y - mean;
}

void ActorUpdate(QTable& logits, StateId s, int chosen_slot, double advantage, double rate) {
  std::vector<double> pi = SoftmaxRow(logits, s);
  for (int b = 0; b < logits.num_slots(); ++b) {
    double indicator = b == chosen_slot ? 1.0 : 0.0;
    logits.At(s, 0, b) += rate * advantage * (indicator - pi[b]);
  }
}

MatlacAgent::MatlacAgent(AgentId id, const Environment& env, LearnerOptions opts, int num_advisors)
    : Agent(id, env, opts),
      others_size_(env.action_space().others_size(id)),
      low_actor_(env.num_states(), 1, env.action_space().size(id)),
      high_actor_(env.num_states(), 1, std::max(num_advisors, 1)),
      low_critic_(env.num_states(), others_size_, env.action_space().size(id)),
      high_critic_(env.num_states(), others_size_, std::max(num_advisors, 1)),
      counters_(env.num_states(), env.action_space().joint_size()) {}

ActionChoice MatlacAgent::ChooseAdvisorAction(StateId s, long /*others_key*/,
                                              const std::vector<ActionId>& recs, Rng& rng) {
  double u_prime = rng.Uniform();
  if (u_prime < opts_.eta) {
    AdvisorId ad = SampleSoftmaxSlot(high_actor_, s, rng);
    return {recs[ad], ActionSource::kAdvisorEnsemble, ad};
  }
  AdvisorId ad = rng.UniformInt(static_cast<int>(recs.size()));
  return {recs[ad], ActionSource::kAdvisorRandom, ad};
}

ActionId MatlacAgent::GreedyAction(StateId s, long /*others_key*/, Rng& rng) {
  return SampleSoftmaxSlot(low_actor_, s, rng);
}

ActionId MatlacAgent::ExecutionAction(StateId s, long /*others_key*/) {
  return low_actor_.ArgmaxSlot(s, 0);
}

bool MatlacAgent::ImmediateUpdates() const {
  return others_size_ == 1 || opts_.resolution == JointResolution::kGreedyCopies;
}

long MatlacAgent::NextOthersKey(StateId next_state) const {
  if (others_size_ == 1) return 0;
  // Greedy-copies: the jointly best entry of the agent's own low critic.
  long best_ok = 0;
  double best = low_critic_.Get(next_state, 0, 0);
  for (long ok = 0; ok < others_size_; ++ok) {
    for (int a = 0; a < low_critic_.num_slots(); ++a) {
      double v = low_critic_.Get(next_state, ok, a);
      if (v > best) {
        best = v;
        best_ok = ok;
      }
    }
  }
  return best_ok;
}

void MatlacAgent::ObserveStep(const StepRecord& rec) {
  StepRecord stamped = rec;
  long count = counters_.VisitPair(rec.state, env_.action_space().JointIndex(rec.joint_action));
  stamped.alpha = opts_.rate.Rate(count);

  if (pending_) {
    Flush(*pending_, env_.action_space().OthersIndex(rec.joint_action, id_));
    pending_.reset();
  }
  if (stamped.terminal) {
    Flush(stamped, 0);
  } else if (ImmediateUpdates()) {
    Flush(stamped, NextOthersKey(stamped.next_state));
  } else {
    pending_ = std::move(stamped);
  }
}

void MatlacAgent::Flush(const StepRecord& rec, long next_others_key) {
  long ok = others_size_ == 1 ? 0 : env_.action_space().OthersIndex(rec.joint_action, id_);
  ActionId a = rec.joint_action[id_];
  double critic_rate = rec.alpha;

  double y = CriticTarget(low_critic_, /*high_level=*/false, rec.reward, rec.next_state,
                          next_others_key, 0, opts_.gamma, rec.terminal);
  double& q = low_critic_.At(rec.state, ok, a);
  q += critic_rate * (y - q);
  std::vector<double> pi = SoftmaxRow(low_actor_, rec.state);
  double adv = Advantage(y, low_critic_, rec.state, ok, pi);
  ActorUpdate(low_actor_, rec.state, a, adv, opts_.actor_rate);

  if (rec.followed_advisor != kNoAdvisor) {
    double y_high = CriticTarget(high_critic_, /*high_level=*/true, rec.reward, rec.next_state,
                                 next_others_key, rec.followed_advisor, opts_.gamma, rec.terminal);
    double& hq = high_critic_.At(rec.state, ok, rec.followed_advisor);
    hq += critic_rate * (y_high - hq);
    std::vector<double> pi_high = SoftmaxRow(high_actor_, rec.state);
    double adv_high = Advantage(y_high, high_critic_, rec.state, ok, pi_high);
    ActorUpdate(high_actor_, rec.state, rec.followed_advisor, adv_high, opts_.actor_rate);
  }
}

std::vector<std::string> MatlacAgent::CheckpointLines() const {
  std::vector<std::string> lines;
  low_actor_.AppendCheckpointLines("ACTOR_LOW", &lines);
  low_critic_.AppendCheckpointLines("CRITIC_LOW", &lines);
  if (has_advisors()) {
    high_actor_.AppendCheckpointLines("ACTOR_HIGH", &lines);
    high_critic_.AppendCheckpointLines("CRITIC_HIGH", &lines);
  }
  return lines;
}

}  // namespace matlql
