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

#include "matlql/baselines.hpp"

#include <algorithm>
#include <map>

#include "matlql/matlql.hpp"

namespace matlql {

void TlqlSync(const QTable& low, QTable& high, StateId s, long others_key, ActionId executed,
              AdvisorId followed) {
  if (followed != kNoAdvisor) {
    high.Set(s, others_key, followed, low.Get(s, others_key, executed));
  }
  int own_policy_slot = high.num_slots() - 1;
  high.Set(s, others_key, own_policy_slot, low.MaxOverSlots(s, others_key));
}

double IndependentQUpdate(QTable& table, StateId s, ActionId a, double r, StateId next_state,
                          double alpha, double gamma, bool terminal) {
  double target = terminal ? r : r + gamma * table.MaxOverSlots(next_state, 0);
  double& q = table.At(s, 0, a);
  q += alpha * (target - q);
  return q;
}

ActionId WeightedRandomAdvisorAction(const std::vector<ActionId>& recs, Rng& rng) {
  if (recs.empty()) {
    throw ContractViolation("weighted advisor action needs at least one recommendation");
  }
  return recs[rng.UniformInt(static_cast<int>(recs.size()))];
}

namespace {

AdvisorId ArgmaxAdvisorSlot(const QTable& high, StateId s, long others_key, int num_advisors) {
  AdvisorId best = 0;
  double best_q = high.Get(s, others_key, 0);
  for (AdvisorId ad = 1; ad < num_advisors; ++ad) {
    double q = high.Get(s, others_key, ad);
    if (q > best_q) {
      best_q = q;
      best = ad;
    }
  }
  return best;
}

}  // namespace

TlqlAgent::TlqlAgent(AgentId id, const Environment& env, LearnerOptions opts, int num_advisors)
    : Agent(id, env, opts),
      low_(env.num_states(), 1, env.action_space().size(id)),
      high_(env.num_states(), 1, num_advisors + 1),
      counters_(env.num_states(), env.action_space().joint_size()) {}

ActionChoice TlqlAgent::ChooseAdvisorAction(StateId s, long /*others_key*/,
                                            const std::vector<ActionId>& recs, Rng& /*rng*/) {
  AdvisorId ad = ArgmaxAdvisorSlot(high_, s, 0, static_cast<int>(recs.size()));
  return {recs[ad], ActionSource::kAdvisorEnsemble, ad};
}

ActionId TlqlAgent::GreedyAction(StateId s, long, Rng&) { return low_.ArgmaxSlot(s, 0); }

ActionId TlqlAgent::ExecutionAction(StateId s, long) { return low_.ArgmaxSlot(s, 0); }

void TlqlAgent::ObserveStep(const StepRecord& rec) {
  long count = counters_.VisitPair(rec.state, env_.action_space().JointIndex(rec.joint_action));
  double alpha = opts_.rate.Rate(count);
  ActionId a = rec.joint_action[id_];
  UpdateLowQ(low_, rec.state, 0, a, rec.reward, rec.next_state, 0, alpha, opts_.gamma,
             rec.terminal);
  TlqlSync(low_, high_, rec.state, 0, a, rec.followed_advisor);
}

std::vector<std::string> TlqlAgent::CheckpointLines() const {
  std::vector<std::string> lines;
  low_.AppendCheckpointLines("LOW", &lines);
  high_.AppendCheckpointLines("HIGH", &lines);
  return lines;
}

AblationAgent::AblationAgent(AgentId id, const Environment& env, LearnerOptions opts,
                             int num_advisors, AblationFlags flags)
    : Agent(id, env, opts),
      flags_(flags),
      num_advisors_(num_advisors),
      others_size_(flags.joint_action ? env.action_space().others_size(id) : 1),
      low_(env.num_states(), others_size_, env.action_space().size(id)),
      high_(env.num_states(), others_size_,
            std::max(num_advisors, 1) + (flags.advisor_eval ? 0 : 1)),
      counters_(env.num_states(), env.action_space().joint_size()) {}

std::string AblationAgent::algorithm() const {
  std::string name = "tlql";
  if (flags_.joint_action) name += "+ja";
  if (flags_.ensemble) name += "+em";
  if (flags_.advisor_eval) name += "+ae";
  return name;
}

long AblationAgent::OthersKey(StateId s, const JointAction& last_executed) const {
  if (others_size_ == 1) return 0;
  if (opts_.resolution == JointResolution::kGreedyCopies) return StageGreedyOthersKey(s);
  return env_.action_space().OthersIndex(last_executed, id_);
}

ActionChoice AblationAgent::ChooseAdvisorAction(StateId s, long others_key,
                                                const std::vector<ActionId>& recs, Rng& rng) {
  if (flags_.ensemble) {
    double u_prime = rng.Uniform();
    if (u_prime < opts_.eta) {
      auto [action, followed] =
          SelectAdvisorAction(high_, s, others_key, recs, counters_.StateVisits(s));
      return {action, ActionSource::kAdvisorEnsemble, followed};
    }
    AdvisorId ad = rng.UniformInt(static_cast<int>(recs.size()));
    return {recs[ad], ActionSource::kAdvisorRandom, ad};
  }
  AdvisorId ad = ArgmaxAdvisorSlot(high_, s, others_key, static_cast<int>(recs.size()));
  return {recs[ad], ActionSource::kAdvisorEnsemble, ad};
}

ActionId AblationAgent::GreedyAction(StateId s, long others_key, Rng&) {
  return low_.ArgmaxSlot(s, others_key);
}

ActionId AblationAgent::ExecutionAction(StateId s, long others_key) {
  return low_.ArgmaxSlot(s, others_key);
}

bool AblationAgent::ImmediateUpdates() const {
  return others_size_ == 1 || opts_.resolution == JointResolution::kGreedyCopies;
}

long AblationAgent::StageGreedyOthersKey(StateId s) const {
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

void AblationAgent::ObserveStep(const StepRecord& rec) {
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
    long next_ok = others_size_ == 1 ? 0 : StageGreedyOthersKey(stamped.next_state);
    Flush(stamped, next_ok);
  } else {
    pending_ = std::move(stamped);
  }
}

void AblationAgent::Flush(const StepRecord& rec, long next_others_key) {
  long ok = others_size_ == 1 ? 0 : env_.action_space().OthersIndex(rec.joint_action, id_);
  if (others_size_ == 1) next_others_key = 0;
  ActionId a = rec.joint_action[id_];
  UpdateLowQ(low_, rec.state, ok, a, rec.reward, rec.next_state, next_others_key, rec.alpha,
             opts_.gamma, rec.terminal);
  if (flags_.advisor_eval) {
    if (rec.followed_advisor != kNoAdvisor) {
      UpdateHighQ(high_, rec.state, ok, rec.followed_advisor, rec.reward, rec.next_state,
                  next_others_key, rec.alpha, opts_.gamma, rec.terminal);
    }
  } else {
    TlqlSync(low_, high_, rec.state, ok, a, rec.followed_advisor);
  }
}

std::vector<std::string> AblationAgent::CheckpointLines() const {
  std::vector<std::string> lines;
  low_.AppendCheckpointLines("LOW", &lines);
  high_.AppendCheckpointLines("HIGH", &lines);
  return lines;
}

std::unique_ptr<AblationAgent> BuildAblationLearner(AgentId id, const Environment& env,
                                                    LearnerOptions opts, int num_advisors,
                                                    AblationFlags flags) {
  return std::make_unique<AblationAgent>(id, env, opts, num_advisors, flags);
}

IndependentQAgent::IndependentQAgent(AgentId id, const Environment& env, LearnerOptions opts)
    : Agent(id, env, opts),
      low_(env.num_states(), 1, env.action_space().size(id)),
      counters_(env.num_states(), env.action_space().joint_size()) {}

ActionId IndependentQAgent::GreedyAction(StateId s, long, Rng&) { return low_.ArgmaxSlot(s, 0); }

ActionId IndependentQAgent::ExecutionAction(StateId s, long) { return low_.ArgmaxSlot(s, 0); }

void IndependentQAgent::ObserveStep(const StepRecord& rec) {
  long count = counters_.VisitPair(rec.state, env_.action_space().JointIndex(rec.joint_action));
  double alpha = opts_.rate.Rate(count);
  IndependentQUpdate(low_, rec.state, rec.joint_action[id_], rec.reward, rec.next_state, alpha,
                     opts_.gamma, rec.terminal);
}

std::vector<std::string> IndependentQAgent::CheckpointLines() const {
  std::vector<std::string> lines;
  low_.AppendCheckpointLines("LOW", &lines);
  return lines;
}

WeightedAdvisorAgent::WeightedAdvisorAgent(AgentId id, const Environment& env, LearnerOptions opts)
    : Agent(id, env, opts),
      low_(env.num_states(), 1, env.action_space().size(id)),
      counters_(env.num_states(), env.action_space().joint_size()) {}

ActionChoice WeightedAdvisorAgent::ChooseAdvisorAction(StateId /*s*/, long /*others_key*/,
                                                       const std::vector<ActionId>& recs,
                                                       Rng& rng) {
  ActionId action = WeightedRandomAdvisorAction(recs, rng);
  // For listening metrics the pick counts against a uniformly random advisor
  // among those recommending the chosen action.
  std::vector<AdvisorId> recommenders;
  for (AdvisorId ad = 0; ad < static_cast<AdvisorId>(recs.size()); ++ad) {
    if (recs[ad] == action) recommenders.push_back(ad);
  }
  AdvisorId credited = recommenders[rng.UniformInt(static_cast<int>(recommenders.size()))];
  return {action, ActionSource::kAdvisorEnsemble, credited};
}

ActionId WeightedAdvisorAgent::GreedyAction(StateId s, long, Rng&) { return low_.ArgmaxSlot(s, 0); }

ActionId WeightedAdvisorAgent::ExecutionAction(StateId s, long) { return low_.ArgmaxSlot(s, 0); }

void WeightedAdvisorAgent::ObserveStep(const StepRecord& rec) {
  long count = counters_.VisitPair(rec.state, env_.action_space().JointIndex(rec.joint_action));
  double alpha = opts_.rate.Rate(count);
  IndependentQUpdate(low_, rec.state, rec.joint_action[id_], rec.reward, rec.next_state, alpha,
                     opts_.gamma, rec.terminal);
}

std::vector<std::string> WeightedAdvisorAgent::CheckpointLines() const {
  std::vector<std::string> lines;
  low_.AppendCheckpointLines("LOW", &lines);
  return lines;
}

FixedPolicyAgent::FixedPolicyAgent(AgentId id, const Environment& env,
                                   std::unique_ptr<Advisor> policy)
    : Agent(id, env, LearnerOptions{}), policy_(std::move(policy)) {}

ActionChoice FixedPolicyAgent::ScriptedAction(StateId s, Rng& rng) {
  return {policy_->Recommend(s, id_, rng), ActionSource::kScripted, kNoAdvisor};
}

}  // namespace matlql
