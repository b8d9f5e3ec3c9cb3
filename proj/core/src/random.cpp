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

#include "dsbelief/random.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dsbelief/errors.hpp"

namespace dsbelief {
namespace {

void require_frame_size(std::size_t n) {
  if (n == 0) throw InvalidFrame("random generation needs at least one element");
  if (n > kMaxFrameSize) throw FrameTooLarge(n, kMaxFrameSize, "random generation");
}

}  // namespace

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return engine_();
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + x % span;
}

MassFunction random_mass(Rng& rng, std::size_t n, std::size_t focal_count) {
  require_frame_size(n);
  const Frame frame = Frame::letters(n);
  const std::size_t nonempty = frame.subset_count() - 1;
  focal_count = std::clamp<std::size_t>(focal_count, 1, nonempty);

  std::vector<Mask> chosen;
  while (chosen.size() < focal_count) {
    const Mask m = static_cast<Mask>(rng.uniform(1, nonempty));
    if (std::find(chosen.begin(), chosen.end(), m) == chosen.end()) chosen.push_back(m);
  }
  std::vector<std::uint64_t> weights;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    weights.push_back(rng.uniform(1, kMaxRandomWeight));
    total += weights.back();
  }
  std::vector<std::pair<Subset, Rational>> focal;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    focal.emplace_back(frame.subset(chosen[i]),
                       Rational(static_cast<std::int64_t>(weights[i]), static_cast<std::int64_t>(total)));
  }
  return MassFunction::from_focal(frame, focal);
}

MassFunction random_mass(std::uint64_t seed, std::size_t n, std::size_t focal_count) {
  Rng rng(seed);
  return random_mass(rng, n, focal_count);
}

BeliefFunction random_belief(Rng& rng, std::size_t n, std::size_t focal_count) {
  return belief_from_mass(random_mass(rng, n, focal_count));
}

BeliefFunction random_belief(std::uint64_t seed, std::size_t n, std::size_t focal_count) {
  return belief_from_mass(random_mass(seed, n, focal_count));
}

std::vector<Rational> random_probability(Rng& rng, std::size_t n) {
  require_frame_size(n);
  std::vector<std::uint64_t> weights(n);
  std::uint64_t total = 0;
  while (total == 0) {
    total = 0;
    for (auto& w : weights) {
      w = rng.uniform(0, kMaxRandomWeight);
      total += w;
    }
  }
  std::vector<Rational> out;
  for (auto w : weights) out.emplace_back(static_cast<std::int64_t>(w), static_cast<std::int64_t>(total));
  return out;
}

std::vector<Rational> random_probability(std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  return random_probability(rng, n);
}

}  // namespace dsbelief
