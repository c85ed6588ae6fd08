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

#ifndef MATLQL_THEORY_HPP_
#define MATLQL_THEORY_HPP_

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "matlql/env.hpp"
#include "matlql/tables.hpp"

namespace matlql {

// A requested stage-game structure does not match the game's rewards.
class StructureMismatchError : public std::runtime_error {
 public:
  explicit StructureMismatchError(const std::string& what) : std::runtime_error(what) {}
};

// A zero-sum stage game had no pure saddle point at some sweep.
class NoPureSaddleError : public std::runtime_error {
 public:
  explicit NoPureSaddleError(const std::string& what) : std::runtime_error(what) {}
};

// A covering-time trial exceeded its step cap; carries the unvisited pairs.
class UnreachablePairsError : public std::runtime_error {
 public:
  UnreachablePairsError(const std::string& what,
                        std::vector<std::pair<StateId, JointAction>> unvisited)
      : std::runtime_error(what), unvisited_(std::move(unvisited)) {}
  const std::vector<std::pair<StateId, JointAction>>& unvisited() const { return unvisited_; }

 private:
  std::vector<std::pair<StateId, JointAction>> unvisited_;
};

// Stage-game structures the fixed-point solver supports. Anything richer
// (mixed equilibria) is refused rather than approximated.
enum class StageKind { kIdenticalInterest, kZeroSumPureSaddle };

// Fixed point of the joint-action Bellman operator with a stage solver that
// is `max` over joint actions (identical interest) or a pure minimax
// (zero sum). Terminal states have value zero.
struct NashQSolution {
  // q[agent][s * joint_size + joint_index] and v[agent][s].
  std::vector<std::vector<double>> q;
  std::vector<std::vector<double>> v;
  // Pure stage equilibrium per state, as a joint-action index.
  std::vector<long> stage_policy;
  int sweeps = 0;

  double Q(AgentId agent, StateId s, long joint_index, long joint_size) const {
    return q[agent][s * joint_size + joint_index];
  }
};

// `env` must also implement EnumerableModel. Value iteration runs until the
// sup-norm sweep change drops below `tolerance`.
NashQSolution SolveNashQ(const Environment& env, StageKind kind, double tolerance = 1e-12,
                         int max_sweeps = 1000000);

// Applies one more sweep to a solution and reports the sup-norm change
// (fixed-point residual).
double NashQResidual(const Environment& env, StageKind kind, const NashQSolution& solution);

// Sup-norm distance between a learner's joint-action low table and the
// oracle values for one agent.
double SupErrorVsOracle(const QTable& low, const NashQSolution& oracle, AgentId agent,
                        const JointActionSpace& space);

using BehaviorPolicy = std::function<JointAction(StateId, Rng&)>;
BehaviorPolicy UniformPolicy(const Environment& env);

struct CoveringTimeResult {
  long covering_time = 0;  // max over trials (empirical upper bound)
  std::vector<long> trial_lengths;

  double MeanLength() const;
};

// Per trial: start from a uniformly random startable state and simulate the
// behavior policy until every (startable state, joint action) pair has been
// executed at least once, restarting on terminal states. Trials use
// independent rng streams derived from `seed`, so extending `trials` only
// adds trials.
CoveringTimeResult EstimateCoveringTime(Environment& env, const BehaviorPolicy& policy, int trials,
                                        long step_cap, uint64_t seed);

// Smallest m with Q_max * (1 - beta)^m <= eps: ceil((1/beta) ln(Q_max/eps)).
// eps >= Q_max is trivially satisfied and yields 0.
long IterationsForAccuracy(double q_max, double beta, double eps);

// The contraction sequence D_1 = Q_max, D_{k+1} = (1 - beta) D_k.
std::vector<double> ContractionSequence(double q_max, double beta, int count);

struct BoundInputs {
  double covering_time = 10;   // L
  double q_max = 10;
  double num_states = 1;       // |S|
  double action_product = 1;   // prod_i |A_i|
  double delta = 0.1;
  double epsilon = 0.1;
  double gamma = 0.9;
  double omega = 0.77;         // polynomial exponent
  double psi = 0.5;            // linear-rate constant, <= 0.712

  double beta() const { return (1.0 - gamma) / 2.0; }
  void Validate(bool for_polynomial) const;
};

// Convergence-step indicators for the two learning-rate families, evaluated
// with all asymptotic constants taken as 1. Order-of-magnitude comparators,
// not certified step counts.
double PolynomialRateBound(const BoundInputs& inputs);
double LinearRateBound(const BoundInputs& inputs);

// Drives `step` until the observed sup error stays within `eps` for `window`
// consecutive checks, and returns the step index at which the confirmed band
// was entered. Returns kNotReached if this never happens within max_steps.
inline constexpr long kNotReached = -1;
long MeasureConvergenceTime(const std::function<void()>& step,
                            const std::function<double()>& sup_error, double eps, long max_steps,
                            long window);

}  // namespace matlql

#endif  // MATLQL_THEORY_HPP_
