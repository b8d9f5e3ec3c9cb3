// Copyright 2026 The dsbelief Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DSBELIEF_RANDOM_HPP_
#define DSBELIEF_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "dsbelief/frame.hpp"
#include "dsbelief/rational.hpp"
#include "dsbelief/set_function.hpp"

namespace dsbelief {

// Deterministic generator used by every randomized construction. Draws are
// computed from raw mt19937_64 output so results do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

// Largest integer weight drawn for a focal set or probability coordinate.
inline constexpr std::uint64_t kMaxRandomWeight = 6;

// Mass function on Frame::letters(n) spread over `focal_count` distinct
// random nonempty subsets (capped at 2^n - 1) with positive integer weights,
// normalized.
MassFunction random_mass(std::uint64_t seed, std::size_t n, std::size_t focal_count);
MassFunction random_mass(Rng& rng, std::size_t n, std::size_t focal_count);

// belief_from_mass(random_mass(...)).
BeliefFunction random_belief(std::uint64_t seed, std::size_t n, std::size_t focal_count);
BeliefFunction random_belief(Rng& rng, std::size_t n, std::size_t focal_count);

// A point of the probability simplex with rational coordinates. Coordinates
// may be zero; at least one is positive.
std::vector<Rational> random_probability(std::uint64_t seed, std::size_t n);
std::vector<Rational> random_probability(Rng& rng, std::size_t n);

}  // namespace dsbelief

#endif  // DSBELIEF_RANDOM_HPP_
