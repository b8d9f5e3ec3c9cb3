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

#include <benchmark/benchmark.h>

#include "dsbelief/conditional_mass.hpp"
#include "dsbelief/conditioning.hpp"
#include "dsbelief/credal.hpp"
#include "dsbelief/random.hpp"

namespace {

using namespace dsbelief;

void BM_Zeta(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MassFunction m = random_mass(1, n, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(zeta_transform(m.values().values()));
}
BENCHMARK(BM_Zeta)->DenseRange(4, 12, 2);

void BM_Moebius(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BeliefFunction bel = random_belief(2, n, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(moebius_transform(bel.values().values()));
}
BENCHMARK(BM_Moebius)->DenseRange(4, 12, 2);

// Includes validation of the result as a belief function.
void BM_FhCondition(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BeliefFunction bel = random_belief(3, n, 2 * n);
  const Subset b = bel.frame().subset(bel.frame().full_mask() >> 1);
  for (auto _ : state) benchmark::DoNotOptimize(fh_condition(bel, b));
}
BENCHMARK(BM_FhCondition)->DenseRange(4, 12, 2);

void BM_DsCondition(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BeliefFunction bel = random_belief(3, n, 2 * n);
  const Subset b = bel.frame().subset(bel.frame().full_mask() >> 1);
  for (auto _ : state) benchmark::DoNotOptimize(ds_condition(bel, b));
}
BENCHMARK(BM_DsCondition)->DenseRange(4, 12, 2);

void BM_ExtremePoints(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BeliefFunction bel = random_belief(4, n, n + 2);
  for (auto _ : state) benchmark::DoNotOptimize(extreme_points(bel));
}
BENCHMARK(BM_ExtremePoints)->DenseRange(3, 7, 1);

// Every (A, B) pair with Bel(B) > 0 against the vertex set.
void BM_ConditionalEnvelopeSweep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BeliefFunction bel = random_belief(5, n, n + 2);
  const CredalSet cs = extreme_points(bel);
  const Frame& f = bel.frame();
  for (auto _ : state) {
    for (Mask b = 1; b < f.subset_count(); ++b) {
      if (!bel[b].is_positive()) continue;
      for (Mask a = 0; a < f.subset_count(); ++a) {
        benchmark::DoNotOptimize(conditional_envelope(cs, f.subset(a), f.subset(b)));
      }
    }
  }
}
BENCHMARK(BM_ConditionalEnvelopeSweep)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

void BM_CertifyConditionalBelief(benchmark::State& state) {
  // Ten elements, B = the first five, and `straddlers` focal sets that meet B
  // without being inside it.
  const auto straddlers = static_cast<std::size_t>(state.range(0));
  const Frame f = Frame::letters(10);
  const Mask b = 0b0000011111;
  std::vector<std::pair<Subset, Rational>> weights{{f.subset(0b1), Rational(1)}, {f.subset(0b110), Rational(1)}};
  for (Mask x = 1; weights.size() < straddlers + 2; ++x) {
    weights.emplace_back(f.subset((x & b) | ((x % 31 + 1) << 5)), Rational(1));
  }
  Rational total(static_cast<std::int64_t>(weights.size()));
  for (auto& w : weights) w.second = w.second / total;
  const BeliefFunction bel = belief_from_mass(MassFunction::from_focal(f, weights));
  for (auto _ : state) benchmark::DoNotOptimize(certify_conditional_belief(bel, f.subset(b)));
}
BENCHMARK(BM_CertifyConditionalBelief)->DenseRange(2, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
