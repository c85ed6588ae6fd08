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

#include "matlql/theory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace matlql {
namespace {

const EnumerableModel& ModelOf(const Environment& env) {
  const auto* model = dynamic_cast<const EnumerableModel*>(&env);
  if (model == nullptr) {
    throw StructureMismatchError("environment '" + env.name() +
                                 "' does not expose an enumerable model");
  }
  return *model;
}

void ValidateStageStructure(const Environment& env, StageKind kind) {
  const EnumerableModel& model = ModelOf(env);
  const JointActionSpace& space = env.action_space();
  if (kind == StageKind::kZeroSumPureSaddle && env.num_agents() != 2) {
    throw StructureMismatchError("zero-sum stage solver needs exactly two agents");
  }
  for (StateId s = 0; s < env.num_states(); ++s) {
    if (env.IsTerminal(s)) continue;
    for (long ji = 0; ji < space.joint_size(); ++ji) {
      std::vector<double> r = model.ExpectedRewards(s, space.FromJointIndex(ji));
      if (kind == StageKind::kIdenticalInterest) {
        for (double rj : r) {
          if (std::fabs(rj - r[0]) > 1e-12) {
            throw StructureMismatchError("rewards are not identical across agents");
          }
        }
      } else {
        if (std::fabs(r[0] + r[1]) > 1e-12) {
          throw StructureMismatchError("rewards do not sum to zero");
        }
      }
    }
  }
}

struct StageSolution {
  std::vector<double> values;  // per agent
  long joint_index;
};

// Pure minimax over agent 0's stage matrix. Throws when maximin != minimax.
StageSolution SolveZeroSumStage(const std::vector<std::vector<double>>& stage_q,
                                const JointActionSpace& space, StateId s) {
  int rows = space.size(0);
  int cols = space.size(1);
  auto at = [&](int i, int j) { return stage_q[0][static_cast<long>(i) * cols + j]; };

  double maximin = -1e300;
  int best_row = 0;
  for (int i = 0; i < rows; ++i) {
    double row_min = at(i, 0);
    for (int j = 1; j < cols; ++j) row_min = std::min(row_min, at(i, j));
    if (row_min > maximin) {
      maximin = row_min;
      best_row = i;
    }
  }
  double minimax = 1e300;
  int best_col = 0;
  for (int j = 0; j < cols; ++j) {
    double col_max = at(0, j);
    for (int i = 1; i < rows; ++i) col_max = std::max(col_max, at(i, j));
    if (col_max < minimax) {
      minimax = col_max;
      best_col = j;
    }
  }
  if (std::fabs(maximin - minimax) > 1e-9) {
    throw NoPureSaddleError("stage game at state " + std::to_string(s) +
                            " has no pure saddle point");
  }
  StageSolution out;
  out.joint_index = static_cast<long>(best_row) * cols + best_col;
  out.values = {maximin, -maximin};
  return out;
}

StageSolution SolveStage(const std::vector<std::vector<double>>& stage_q,
                         const JointActionSpace& space, StateId s, StageKind kind) {
  if (kind == StageKind::kZeroSumPureSaddle) return SolveZeroSumStage(stage_q, space, s);
  long best_ji = 0;
  double best = stage_q[0][0];
  for (long ji = 1; ji < space.joint_size(); ++ji) {
    if (stage_q[0][ji] > best) {
      best = stage_q[0][ji];
      best_ji = ji;
    }
  }
  StageSolution out;
  out.joint_index = best_ji;
  out.values.assign(stage_q.size(), 0.0);
  for (size_t j = 0; j < stage_q.size(); ++j) out.values[j] = stage_q[j][best_ji];
  return out;
}

// One synchronous sweep: recompute stage Q values from `v`, solve every
// stage game, and write the new state values. Returns the sup-norm change.
double Sweep(const Environment& env, StageKind kind, std::vector<std::vector<double>>* v,
             std::vector<std::vector<double>>* q, std::vector<long>* policy) {
  const EnumerableModel& model = ModelOf(env);
  const JointActionSpace& space = env.action_space();
  int n = env.num_agents();
  double change = 0.0;
  for (StateId s = 0; s < env.num_states(); ++s) {
    if (env.IsTerminal(s)) continue;
    std::vector<std::vector<double>> stage(n, std::vector<double>(space.joint_size(), 0.0));
    for (long ji = 0; ji < space.joint_size(); ++ji) {
      JointAction ja = space.FromJointIndex(ji);
      std::vector<double> r = model.ExpectedRewards(s, ja);
      std::vector<double> future(n, 0.0);
      for (const auto& succ : model.Transitions(s, ja)) {
        if (env.IsTerminal(succ.state)) continue;
        for (int j = 0; j < n; ++j) future[j] += succ.probability * (*v)[j][succ.state];
      }
      for (int j = 0; j < n; ++j) {
        stage[j][ji] = r[j] + env.discount() * future[j];
        (*q)[j][s * space.joint_size() + ji] = stage[j][ji];
      }
    }
    StageSolution sol = SolveStage(stage, space, s, kind);
    (*policy)[s] = sol.joint_index;
    for (int j = 0; j < n; ++j) {
      change = std::max(change, std::fabs(sol.values[j] - (*v)[j][s]));
      (*v)[j][s] = sol.values[j];
    }
  }
  return change;
}

}  // namespace

NashQSolution SolveNashQ(const Environment& env, StageKind kind, double tolerance,
                         int max_sweeps) {
  ValidateStageStructure(env, kind);
  const JointActionSpace& space = env.action_space();
  int n = env.num_agents();
  NashQSolution sol;
  sol.v.assign(n, std::vector<double>(env.num_states(), 0.0));
  sol.q.assign(n, std::vector<double>(env.num_states() * space.joint_size(), 0.0));
  sol.stage_policy.assign(env.num_states(), 0);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double change = Sweep(env, kind, &sol.v, &sol.q, &sol.stage_policy);
    sol.sweeps = sweep + 1;
    if (change < tolerance) return sol;
  }
  throw StructureMismatchError("value iteration did not converge within the sweep budget");
}

double NashQResidual(const Environment& env, StageKind kind, const NashQSolution& solution) {
  NashQSolution copy = solution;
  return Sweep(env, kind, &copy.v, &copy.q, &copy.stage_policy);
}

double SupErrorVsOracle(const QTable& low, const NashQSolution& oracle, AgentId agent,
                        const JointActionSpace& space) {
  double err = 0.0;
  for (StateId s = 0; s < low.num_states(); ++s) {
    for (long ji = 0; ji < space.joint_size(); ++ji) {
      JointAction ja = space.FromJointIndex(ji);
      long ok = low.others_size() == 1 ? 0 : space.OthersIndex(ja, agent);
      double learned = low.Get(s, ok, ja[agent]);
      err = std::max(err, std::fabs(learned - oracle.Q(agent, s, ji, space.joint_size())));
    }
  }
  return err;
}

BehaviorPolicy UniformPolicy(const Environment& env) {
  std::vector<int> sizes = env.action_space().sizes();
  return [sizes](StateId, Rng& rng) {
    JointAction ja(sizes.size());
    for (size_t j = 0; j < sizes.size(); ++j) ja[j] = rng.UniformInt(sizes[j]);
    return ja;
  };
}

double CoveringTimeResult::MeanLength() const {
  if (trial_lengths.empty()) return 0.0;
  double sum = std::accumulate(trial_lengths.begin(), trial_lengths.end(), 0.0);
  return sum / static_cast<double>(trial_lengths.size());
}

CoveringTimeResult EstimateCoveringTime(Environment& env, const BehaviorPolicy& policy, int trials,
                                        long step_cap, uint64_t seed) {
  const JointActionSpace& space = env.action_space();
  std::vector<StateId> startable;
  for (StateId s = 0; s < env.num_states(); ++s) {
    if (env.IsStartable(s)) startable.push_back(s);
  }
  if (startable.empty()) throw ContractViolation("environment has no startable states");
  const long universe = static_cast<long>(startable.size()) * space.joint_size();
  std::vector<long> pair_slot(env.num_states(), -1);
  for (size_t i = 0; i < startable.size(); ++i) {
    pair_slot[startable[i]] = static_cast<long>(i) * space.joint_size();
  }

  CoveringTimeResult result;
  result.trial_lengths.reserve(trials);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(Rng::Mix(seed, trial));
    std::vector<bool> visited(universe, false);
    long remaining = universe;
    env.Reset(rng);
    StateId s = startable[rng.UniformInt(static_cast<int>(startable.size()))];
    long steps = 0;
    while (remaining > 0) {
      if (steps >= step_cap) {
        std::vector<std::pair<StateId, JointAction>> unvisited;
        for (size_t i = 0; i < startable.size(); ++i) {
          for (long ji = 0; ji < space.joint_size(); ++ji) {
            if (!visited[static_cast<long>(i) * space.joint_size() + ji]) {
              unvisited.emplace_back(startable[i], space.FromJointIndex(ji));
            }
          }
        }
        throw UnreachablePairsError(
            "covering trial " + std::to_string(trial) + " exceeded " + std::to_string(step_cap) +
                " steps with " + std::to_string(unvisited.size()) + " pairs unvisited",
            std::move(unvisited));
      }
      JointAction ja = policy(s, rng);
      long slot = pair_slot[s] + space.JointIndex(ja);
      if (!visited[slot]) {
        visited[slot] = true;
        --remaining;
      }
      StepOutcome out = env.Step(s, ja, rng);
      ++steps;
      if (remaining == 0) break;
      if (out.terminal) {
        env.Reset(rng);
        s = startable[rng.UniformInt(static_cast<int>(startable.size()))];
      } else {
        s = out.next_state;
      }
    }
    result.trial_lengths.push_back(steps);
    result.covering_time = std::max(result.covering_time, steps);
  }
  return result;
}

long IterationsForAccuracy(double q_max, double beta, double eps) {
  if (q_max <= 0 || beta <= 0 || eps <= 0) {
    throw ConfigError("iteration bound needs positive q_max, beta, eps");
  }
  if (eps >= q_max) return 0;
  return static_cast<long>(std::ceil(std::log(q_max / eps) / beta));
}

std::vector<double> ContractionSequence(double q_max, double beta, int count) {
  std::vector<double> d;
  d.reserve(count);
  double cur = q_max;
  for (int k = 0; k < count; ++k) {
    d.push_back(cur);
    cur *= 1.0 - beta;
  }
  return d;
}

void BoundInputs::Validate(bool for_polynomial) const {
  std::vector<std::string> issues;
  if (covering_time < 1) issues.push_back("covering time must be >= 1");
  if (q_max <= 0) issues.push_back("q_max must be positive");
  if (num_states < 1 || action_product < 1) issues.push_back("state/action counts must be >= 1");
  if (delta <= 0 || delta >= 1) issues.push_back("delta must be in (0, 1)");
  if (epsilon <= 0 || epsilon >= 1) issues.push_back("epsilon must be in (0, 1)");
  if (gamma < 0 || gamma >= 1) issues.push_back("gamma must be in [0, 1)");
  if (for_polynomial) {
    if (omega <= 0.5 || omega >= 1.0) issues.push_back("omega must be in (1/2, 1)");
  } else {
    if (psi <= 0 || psi > 0.712) issues.push_back("psi must be in (0, 0.712]");
  }
  if (!issues.empty()) throw ConfigError(issues);
}

double PolynomialRateBound(const BoundInputs& in) {
  in.Validate(/*for_polynomial=*/true);
  double beta = in.beta();
  double log_arg = in.num_states * in.action_product * in.q_max / (in.delta * beta * in.epsilon);
  if (log_arg <= 1.0) throw ConfigError("polynomial bound log argument must exceed 1");
  double big = std::pow(in.covering_time, 1.0 + 3.0 * in.omega) * in.q_max * in.q_max *
               std::log(log_arg) / (beta * beta * in.epsilon * in.epsilon);
  double first = std::pow(big, 1.0 - in.omega) / in.covering_time;
  double iterations = (in.covering_time / beta) * std::log(in.q_max / in.epsilon);
  double second = std::pow((iterations + 1.0) / 2.0, 1.0 / (1.0 - in.omega));
  return first + second;
}

double LinearRateBound(const BoundInputs& in) {
  in.Validate(/*for_polynomial=*/false);
  double beta = in.beta();
  double log_arg =
      in.num_states * in.action_product * in.q_max / (in.delta * beta * in.epsilon * in.psi);
  if (log_arg <= 1.0) throw ConfigError("linear bound log argument must exceed 1");
  double base = in.covering_time + in.psi * in.covering_time + 1.0;
  double exponent = std::log(in.q_max / in.epsilon) / beta;
  double lead = std::pow(base, exponent);
  double tail = in.q_max * in.q_max * std::log(log_arg) /
                (beta * beta * in.epsilon * in.epsilon * in.psi * in.psi);
  return lead * tail;
}

long MeasureConvergenceTime(const std::function<void()>& step,
                            const std::function<double()>& sup_error, double eps, long max_steps,
                            long window) {
  long band_start = kNotReached;
  for (long t = 0; t <= max_steps; ++t) {
    double err = sup_error();
    if (err <= eps) {
      if (band_start == kNotReached) band_start = t;
      if (t - band_start >= window) return band_start;
    } else {
      band_start = kNotReached;
    }
    if (t == max_steps) break;
    step();
  }
  return kNotReached;
}

}  // namespace matlql
