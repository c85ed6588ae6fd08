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

#include "matlql/matlql.hpp"

#include <algorithm>
#include <map>

namespace matlql {

double UpdateHighQ(QTable& high, StateId s, long others_key, AdvisorId ad, double r,
                   StateId next_state, long next_others_key, double alpha, double gamma,
                   bool terminal) {
  double target = terminal ? r : r + gamma * high.Get(next_state, next_others_key, ad);
  double& q = high.At(s, others_key, ad);
  q += alpha * (target - q);
  return q;
}

double UpdateLowQ(QTable& low, StateId s, long others_key, ActionId a, double r,
                  StateId next_state, long next_others_key, double alpha, double gamma,
                  bool terminal) {
  double target = terminal ? r : r + gamma * low.MaxOverSlots(next_state, next_others_key);
  double& q = low.At(s, others_key, a);
  q += alpha * (target - q);
  return q;
}

double ValueOfVote(const QTable& high, StateId s, long others_key,
                   const std::vector<AdvisorId>& recommenders, long mu_s) {
  if (recommenders.empty()) {
    throw ContractViolation("value of vote is undefined for an empty recommender set");
  }
  // Exactly one estimate enters unweighted: the best one, with ties resolved
  // toward the lowest advisor id.
  AdvisorId best = recommenders[0];
  double best_q = high.Get(s, others_key, best);
  for (AdvisorId ad : recommenders) {
    double q = high.Get(s, others_key, ad);
    if (q > best_q) {
      best_q = q;
      best = ad;
    }
  }
  double value = best_q;
  for (AdvisorId ad : recommenders) {
    if (ad == best) continue;
    value += high.Get(s, others_key, ad) / static_cast<double>(mu_s);
  }
  return value;
}

std::pair<ActionId, AdvisorId> SelectAdvisorAction(const QTable& high, StateId s, long others_key,
                                                   const std::vector<ActionId>& recs, long mu_s) {
  if (recs.empty()) {
    throw ContractViolation("advisor selection needs at least one recommendation");
  }
  std::map<ActionId, std::vector<AdvisorId>> groups;
  for (AdvisorId ad = 0; ad < static_cast<AdvisorId>(recs.size()); ++ad) {
    groups[recs[ad]].push_back(ad);
  }
  ActionId best_action = groups.begin()->first;
  double best_value = 0.0;
  bool first = true;
  for (const auto& [action, recommenders] : groups) {
    double value = ValueOfVote(high, s, others_key, recommenders, mu_s);
    if (first || value > best_value) {
      first = false;
      best_value = value;
      best_action = action;
    }
  }
  const auto& winners = groups[best_action];
  AdvisorId followed = winners[0];
  double followed_q = high.Get(s, others_key, followed);
  for (AdvisorId ad : winners) {
    double q = high.Get(s, others_key, ad);
    if (q > followed_q) {
      followed_q = q;
      followed = ad;
    }
  }
  return {best_action, followed};
}

SelectionBranch SelectBranch(double u, double u_prime, double eps_prime, double eps, double eta) {
  if (u < eps_prime) {
    return u_prime < eta ? SelectionBranch::kAdvisorEnsemble : SelectionBranch::kAdvisorRandom;
  }
  if (u < eps) return SelectionBranch::kRandom;
  return SelectionBranch::kGreedy;
}

MatlqlAgent::MatlqlAgent(AgentId id, const Environment& env, LearnerOptions opts, int num_advisors)
    : Agent(id, env, opts),
      others_size_(env.action_space().others_size(id)),
      low_(env.num_states(), others_size_, env.action_space().size(id)),
      high_(env.num_states(), others_size_, std::max(num_advisors, 1)),
      counters_(env.num_states(), env.action_space().joint_size()) {}

long MatlqlAgent::OthersKey(StateId s, const JointAction& last_executed) const {
  if (others_size_ == 1) return 0;
  if (opts_.resolution == JointResolution::kGreedyCopies) return StageGreedyOthersKey(s);
  return env_.action_space().OthersIndex(last_executed, id_);
}

ActionChoice MatlqlAgent::ChooseAdvisorAction(StateId s, long others_key,
                                              const std::vector<ActionId>& recs, Rng& rng) {
  double u_prime = rng.Uniform();
  if (u_prime < opts_.eta) {
    auto [action, followed] =
        SelectAdvisorAction(high_, s, others_key, recs, counters_.StateVisits(s));
    return {action, ActionSource::kAdvisorEnsemble, followed};
  }
  AdvisorId ad = rng.UniformInt(static_cast<int>(recs.size()));
  return {recs[ad], ActionSource::kAdvisorRandom, ad};
}

ActionId MatlqlAgent::GreedyAction(StateId s, long others_key, Rng& /*rng*/) {
  return low_.ArgmaxSlot(s, others_key);
}

ActionId MatlqlAgent::ExecutionAction(StateId s, long others_key) {
  return low_.ArgmaxSlot(s, others_key);
}

bool MatlqlAgent::ImmediateUpdates() const {
  return others_size_ == 1 || opts_.resolution == JointResolution::kGreedyCopies;
}

long MatlqlAgent::StageGreedyOthersKey(StateId s) const {
  long best_ok = 0;
  double best = low_.Get(s, 0, 0);
  for (long ok = 0; ok < others_size_; ++ok) {
    for (int a = 0; a < low_.num_slots(); ++a) {
      double v = low_.Get(s, ok, a);
      if (v > best) {
        best = v;
        best_ok = ok;
      }
    }
  }
  return best_ok;
}

long MatlqlAgent::NextOthersKey(StateId next_state) const {
  if (others_size_ == 1) return 0;
  return StageGreedyOthersKey(next_state);
}

void MatlqlAgent::ObserveStep(const StepRecord& rec) {
  StepRecord stamped = rec;
  long count = counters_.VisitPair(rec.state, env_.action_space().JointIndex(rec.joint_action));
  stamped.alpha = opts_.rate.Rate(count);

  if (pending_) {
    // The joint action just executed is the first observation of the other
    // agents' behaviour at the pending transition's successor state.
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

void MatlqlAgent::Flush(const StepRecord& rec, long next_others_key) {
  long ok = others_size_ == 1 ? 0 : env_.action_space().OthersIndex(rec.joint_action, id_);
  UpdateLowQ(low_, rec.state, ok, rec.joint_action[id_], rec.reward, rec.next_state,
             next_others_key, rec.alpha, opts_.gamma, rec.terminal);
  if (rec.followed_advisor != kNoAdvisor) {
    UpdateHighQ(high_, rec.state, ok, rec.followed_advisor, rec.reward, rec.next_state,
                next_others_key, rec.alpha, opts_.gamma, rec.terminal);
  }
}

std::vector<std::string> MatlqlAgent::CheckpointLines() const {
  std::vector<std::string> lines;
  low_.AppendCheckpointLines("LOW", &lines);
  if (has_advisors()) high_.AppendCheckpointLines("HIGH", &lines);
  return lines;
}

void MatlqlAgent::RestoreCheckpoint(const std::string& text) {
  auto lines = SplitLines(text);
  low_ = QTable::FromCheckpointLines(lines, "LOW");
  if (has_advisors()) high_ = QTable::FromCheckpointLines(lines, "HIGH");
}

}  // namespace matlql
