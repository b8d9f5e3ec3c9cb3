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

#include "dsbelief/set_function.hpp"

#include <stdexcept>

#include "dsbelief/errors.hpp"

namespace dsbelief {
namespace {

void require_power_of_two(std::size_t size, const char* what) {
  if (size == 0 || (size & (size - 1)) != 0) {
    throw std::invalid_argument(std::string(what) + ": length must be a power of two");
  }
}

std::string describe(const Frame& frame, Mask m) { return frame.subset(m).to_string(); }

}  // namespace

SetFunction::SetFunction(Frame frame, std::vector<Rational> values)
    : frame_(std::move(frame)), values_(std::move(values)) {
  if (values_.size() != frame_.subset_count()) {
    throw std::invalid_argument("SetFunction: expected " + std::to_string(frame_.subset_count()) +
                                " values, got " + std::to_string(values_.size()));
  }
}

SetFunction SetFunction::zeros(Frame frame) {
  std::vector<Rational> values(frame.subset_count());
  return SetFunction(std::move(frame), std::move(values));
}

const Rational& SetFunction::at(const Subset& s) const {
  require_same_frame(frame_, s.frame(), "SetFunction::at");
  return values_[s.bits()];
}

std::vector<Rational> zeta_transform(std::vector<Rational> f) {
  require_power_of_two(f.size(), "zeta_transform");
  for (std::size_t bit = 1; bit < f.size(); bit <<= 1) {
    for (std::size_t a = 0; a < f.size(); ++a) {
      if (a & bit) f[a] += f[a ^ bit];
    }
  }
  return f;
}

std::vector<Rational> moebius_transform(std::vector<Rational> g) {
  require_power_of_two(g.size(), "moebius_transform");
  for (std::size_t bit = 1; bit < g.size(); bit <<= 1) {
    for (std::size_t a = 0; a < g.size(); ++a) {
      if (a & bit) g[a] -= g[a ^ bit];
    }
  }
  return g;
}

MassFunction::MassFunction(SetFunction values) : values_(std::move(values)) {
  const Frame& frame = values_.frame();
  if (!values_[0].is_zero()) {
    throw InvalidMass("M1", "mass of the empty set is " + values_[0].to_string());
  }
  Rational total;
  for (Mask m = 0; m < frame.subset_count(); ++m) {
    if (values_[m].is_negative()) {
      throw InvalidMass("nonnegativity", "mass of " + describe(frame, m) + " is " + values_[m].to_string());
    }
    total += values_[m];
  }
  if (total != Rational(1)) throw InvalidMass("M2", "masses sum to " + total.to_string());
}

MassFunction MassFunction::from_focal(const Frame& frame,
                                      const std::vector<std::pair<Subset, Rational>>& weights) {
  std::vector<Rational> values(frame.subset_count());
  for (const auto& [set, weight] : weights) {
    require_same_frame(frame, set.frame(), "MassFunction::from_focal");
    values[set.bits()] += weight;
  }
  return MassFunction(SetFunction(frame, std::move(values)));
}

std::vector<Mask> MassFunction::focal_sets() const {
  std::vector<Mask> out;
  for (Mask m = 0; m < frame().subset_count(); ++m) {
    if (values_[m].is_positive()) out.push_back(m);
  }
  return out;
}

bool MassFunction::is_bayesian() const {
  for (Mask m : focal_sets()) {
    if (cardinality(m) != 1) return false;
  }
  return true;
}

BeliefFunction::BeliefFunction(SetFunction values)
    : values_(values), mass_(mass_from_belief(values)) {}

Rational BeliefFunction::plausibility(Mask m) const {
  return Rational(1) - values_[frame().full_mask() & ~m];
}

Rational BeliefFunction::plausibility(const Subset& s) const {
  require_same_frame(frame(), s.frame(), "BeliefFunction::plausibility");
  return plausibility(s.bits());
}

BeliefFunction belief_from_mass(const MassFunction& m) {
  SetFunction bel(m.frame(), zeta_transform(m.values().values()));
  return BeliefFunction(std::move(bel), m);
}

MassFunction mass_from_belief(const SetFunction& bel) {
  const Frame& frame = bel.frame();
  if (!bel[0].is_zero()) {
    throw NotABeliefFunction("B0", 0, "Bel(empty) = " + bel[0].to_string());
  }
  if (bel[frame.full_mask()] != Rational(1)) {
    throw NotABeliefFunction("B2", frame.full_mask(), "Bel(S) = " + bel[frame.full_mask()].to_string());
  }
  std::vector<Rational> m = moebius_transform(bel.values());
  for (Mask a : canonical_order(frame.size())) {
    if (m[a].is_negative()) {
      throw NotABeliefFunction("B3", a,
                               "Moebius coefficient of " + describe(frame, a) + " is " + m[a].to_string());
    }
  }
  return MassFunction(SetFunction(frame, std::move(m)));
}

BeliefFunction probability_belief(const Frame& frame, const std::vector<Rational>& probabilities) {
  if (probabilities.size() != frame.size()) {
    throw std::invalid_argument("probability_belief: expected one probability per frame element");
  }
  std::vector<std::pair<Subset, Rational>> weights;
  for (std::size_t i = 0; i < frame.size(); ++i) weights.emplace_back(frame.singleton(i), probabilities[i]);
  return belief_from_mass(MassFunction::from_focal(frame, weights));
}

namespace {

// B0-B2 shared by both modes. Returns false and fills `report` on failure.
bool check_normalization(const SetFunction& f, AxiomReport& report) {
  const Frame& frame = f.frame();
  if (!f[0].is_zero()) {
    report.violated = "B0";
    report.witness = {0};
    report.detail = "f(empty) = " + f[0].to_string();
    return false;
  }
  for (Mask a : canonical_order(frame.size())) {
    if (f[a].is_negative()) {
      report.violated = "B1";
      report.witness = {a};
      report.detail = "f(" + describe(frame, a) + ") = " + f[a].to_string();
      return false;
    }
  }
  if (f[frame.full_mask()] != Rational(1)) {
    report.violated = "B2";
    report.witness = {frame.full_mask()};
    report.detail = "f(S) = " + f[frame.full_mask()].to_string();
    return false;
  }
  return true;
}

// Literal B3: for the collection `members`, compare f(union) against the
// inclusion-exclusion sum over nonempty sub-collections.
bool b3_holds(const SetFunction& f, const std::vector<Mask>& members, Rational& rhs_out) {
  const std::size_t k = members.size();
  Mask unite = 0;
  for (Mask a : members) unite |= a;
  Rational rhs;
  for (std::size_t pick = 1; pick < (std::size_t{1} << k); ++pick) {
    Mask inter = f.frame().full_mask();
    for (std::size_t i = 0; i < k; ++i) {
      if ((pick >> i) & 1U) inter &= members[i];
    }
    if (__builtin_popcountll(pick) % 2 == 1) {
      rhs += f[inter];
    } else {
      rhs -= f[inter];
    }
  }
  rhs_out = rhs;
  return f[unite] >= rhs;
}

}  // namespace

AxiomReport check_belief_axioms(const SetFunction& f, AxiomCheckMode mode) {
  const Frame& frame = f.frame();
  if (mode == AxiomCheckMode::kDirect && frame.size() > kMaxDirectCheckFrameSize) {
    throw FrameTooLarge(frame.size(), kMaxDirectCheckFrameSize, "direct B3 check");
  }
  AxiomReport report;
  report.moebius = moebius_transform(f.values());
  if (!check_normalization(f, report)) return report;

  if (mode == AxiomCheckMode::kMoebius) {
    for (Mask a : canonical_order(frame.size())) {
      if (report.moebius[a].is_negative()) {
        report.violated = "B3";
        report.witness = {a};
        report.detail = "Moebius coefficient of " + describe(frame, a) + " is " + report.moebius[a].to_string();
        return report;
      }
    }
    report.is_belief_function = true;
    return report;
  }

  // Every collection of distinct nonempty subsets with at least two members.
  std::vector<Mask> nonempty;
  for (Mask a : canonical_order(frame.size())) {
    if (a != 0) nonempty.push_back(a);
  }
  const std::size_t count = nonempty.size();
  for (std::size_t pick = 1; pick < (std::size_t{1} << count); ++pick) {
    if (__builtin_popcountll(pick) < 2) continue;
    std::vector<Mask> members;
    for (std::size_t i = 0; i < count; ++i) {
      if ((pick >> i) & 1U) members.push_back(nonempty[i]);
    }
    Rational rhs;
    if (!b3_holds(f, members, rhs)) {
      Mask unite = 0;
      std::string names;
      for (Mask a : members) {
        unite |= a;
        names += (names.empty() ? "" : ", ") + describe(frame, a);
      }
      report.violated = "B3";
      report.witness = members;
      report.detail = "f(" + describe(frame, unite) + ") = " + f[unite].to_string() +
                      " < " + rhs.to_string() + " for collection " + names;
      return report;
    }
  }
  report.is_belief_function = true;
  return report;
}

}  // namespace dsbelief
