// Copyright 2026 The DGSP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DGSP_RNG_H_
#define DGSP_RNG_H_

#include <cstdint>
#include <random>

namespace dgsp {

// Deterministic random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard. Variates are derived from the raw
// 64-bit words by the explicit transforms below rather than the
// implementation-defined std:: distributions, so a seed produces the same
// stream on every conforming platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent generator for sub-task `stream` of a run seeded with `seed`.
  // Both words are mixed through SplitMix64.
  static Rng Stream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in [0, bound), rejection-sampled to avoid modulo bias.
  std::uint64_t Below(std::uint64_t bound);

  // Standard normal via the Box-Muller transform (no cached second variate).
  double Normal();
  double Normal(double mean, double stddev) { return mean + stddev * Normal(); }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t SplitMix64(std::uint64_t x);

}  // namespace dgsp

#endif  // DGSP_RNG_H_
