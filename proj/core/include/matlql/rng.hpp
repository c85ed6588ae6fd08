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

#ifndef MATLQL_RNG_HPP_
#define MATLQL_RNG_HPP_

#include <cstdint>
#include <random>

namespace matlql {

// Seeded random stream with platform-independent draw semantics. All
// randomness in the library flows through instances of this class, so a run
// is reproducible from its seed alone.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  // Uniform double in [0, 1), 53 mantissa bits.
  double Uniform() { return (gen_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). n must be positive and small relative to
  // 2^64, so the modulo bias is negligible for simulation purposes.
  int UniformInt(int n) { return static_cast<int>(gen_() % static_cast<uint64_t>(n)); }

  uint64_t Raw() { return gen_(); }

  // Derives an independent child seed (splitmix64 finalizer over a + b).
  static uint64_t Mix(uint64_t a, uint64_t b) {
    uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace matlql

#endif  // MATLQL_RNG_HPP_
