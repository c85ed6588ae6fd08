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

#ifndef MATLQL_SCHEDULES_HPP_
#define MATLQL_SCHEDULES_HPP_

#include <cmath>
#include <string>

#include "matlql/types.hpp"

namespace matlql {

// Linear decay of the advisor-reuse probability: starts at `initial`,
// reaches exactly 0 at `decay_horizon` episodes and stays there.
struct PprSchedule {
  double initial = 1.0;
  long decay_horizon = 1;

  double Epsilon(long episode) const {
    if (episode >= decay_horizon) return 0.0;
    double frac = 1.0 - static_cast<double>(episode) / static_cast<double>(decay_horizon);
    double eps = initial * frac;
    return eps < 0.0 ? 0.0 : (eps > 1.0 ? 1.0 : eps);
  }
};

// Exploration split: `epsilon` bounds the random branch, `eta` picks between
// ensemble and uniformly random advisor selection inside the advisor branch.
struct ExplorationPolicy {
  double epsilon = 0.95;
  double eta = 0.9;
};

enum class RateFamily { kConstant, kPolynomial, kLinear };

// Per-(state, joint action) learning-rate family. Polynomial and linear
// rates are count^(-omega) with the count including the current visit, so
// the first visit yields rate 1.
class LearningRateSchedule {
 public:
  static LearningRateSchedule Constant(double alpha) {
    if (alpha < 0.0 || alpha >= 1.0) {
      throw ConfigError("constant learning rate must be in [0, 1)");
    }
    return LearningRateSchedule(RateFamily::kConstant, alpha, 0.0);
  }
  static LearningRateSchedule Polynomial(double omega) {
    if (omega <= 0.5 || omega >= 1.0) {
      throw ConfigError("polynomial learning-rate exponent must be in (1/2, 1)");
    }
    return LearningRateSchedule(RateFamily::kPolynomial, 0.0, omega);
  }
  static LearningRateSchedule Linear() {
    return LearningRateSchedule(RateFamily::kLinear, 0.0, 1.0);
  }

  RateFamily family() const { return family_; }
  double alpha() const { return alpha_; }
  double omega() const { return omega_; }

  double Rate(long pair_count) const {
    if (pair_count < 1) throw ContractViolation("pair count must include the current visit");
    switch (family_) {
      case RateFamily::kConstant: return alpha_;
      case RateFamily::kPolynomial: return std::pow(static_cast<double>(pair_count), -omega_);
      case RateFamily::kLinear: return 1.0 / static_cast<double>(pair_count);
    }
    return alpha_;
  }

  std::string Describe() const {
    switch (family_) {
      case RateFamily::kConstant: return "constant(" + std::to_string(alpha_) + ")";
      case RateFamily::kPolynomial: return "polynomial(" + std::to_string(omega_) + ")";
      case RateFamily::kLinear: return "linear";
    }
    return "";
  }

 private:
  LearningRateSchedule(RateFamily family, double alpha, double omega)
      : family_(family), alpha_(alpha), omega_(omega) {}

  RateFamily family_;
  double alpha_;
  double omega_;
};

}  // namespace matlql

#endif  // MATLQL_SCHEDULES_HPP_
