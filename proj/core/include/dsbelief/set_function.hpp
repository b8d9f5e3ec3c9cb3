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

#ifndef DSBELIEF_SET_FUNCTION_HPP_
#define DSBELIEF_SET_FUNCTION_HPP_

#include <string>
#include <utility>
#include <vector>

#include "dsbelief/frame.hpp"
#include "dsbelief/rational.hpp"

namespace dsbelief {

// A total function 2^S -> Q, stored densely and indexed by subset bitmask.
class SetFunction {
 public:
  // `values` must have exactly 2^n entries.
  SetFunction(Frame frame, std::vector<Rational> values);
  static SetFunction zeros(Frame frame);

  const Frame& frame() const { return frame_; }
  const Rational& operator[](Mask m) const { return values_[m]; }
  const Rational& at(const Subset& s) const;
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.frame_ == b.frame_ && a.values_ == b.values_;
  }

 private:
  Frame frame_;
  std::vector<Rational> values_;
};

// Subset-sum (zeta) transform: out[A] = sum over B subset of A of f[B].
// O(n 2^n). `f.size()` must be a power of two.
std::vector<Rational> zeta_transform(std::vector<Rational> f);

// Inverse of zeta_transform:
// out[A] = sum over B subset of A of (-1)^{|A \ B|} g[B].
std::vector<Rational> moebius_transform(std::vector<Rational> g);

// Nonnegative set function with m(empty) = 0 and total mass 1.
class MassFunction {
 public:
  // Throws InvalidMass naming the violated condition (M1, M2 or
  // nonnegativity).
  explicit MassFunction(SetFunction values);

  // Sums the given weights per subset; validates as above.
  static MassFunction from_focal(const Frame& frame,
                                 const std::vector<std::pair<Subset, Rational>>& weights);

  const Frame& frame() const { return values_.frame(); }
  const Rational& operator[](Mask m) const { return values_[m]; }
  const Rational& at(const Subset& s) const { return values_.at(s); }
  const SetFunction& values() const { return values_; }

  // Subsets with strictly positive mass, in increasing mask order.
  std::vector<Mask> focal_sets() const;
  // True when every focal set is a singleton, i.e. the belief function is a
  // probability.
  bool is_bayesian() const;

  friend bool operator==(const MassFunction& a, const MassFunction& b) { return a.values_ == b.values_; }

 private:
  SetFunction values_;
};

class BeliefFunction;
BeliefFunction belief_from_mass(const MassFunction& m);

// A set function satisfying B0-B3, with its Moebius inverse cached.
class BeliefFunction {
 public:
  // Throws NotABeliefFunction with the violated axiom and a witness subset.
  explicit BeliefFunction(SetFunction values);

  const Frame& frame() const { return values_.frame(); }
  const Rational& operator[](Mask m) const { return values_[m]; }
  const Rational& at(const Subset& s) const { return values_.at(s); }
  const SetFunction& values() const { return values_; }
  const MassFunction& mass() const { return mass_; }

  // Pl(A) = 1 - Bel(complement of A).
  Rational plausibility(Mask m) const;
  Rational plausibility(const Subset& s) const;

  friend bool operator==(const BeliefFunction& a, const BeliefFunction& b) { return a.values_ == b.values_; }

 private:
  BeliefFunction(SetFunction values, MassFunction mass)
      : values_(std::move(values)), mass_(std::move(mass)) {}
  friend BeliefFunction belief_from_mass(const MassFunction& m);

  SetFunction values_;
  MassFunction mass_;
};

// Moebius inverse of `bel`. Throws NotABeliefFunction if the result is not a
// mass function; the witness is the offending subset.
MassFunction mass_from_belief(const SetFunction& bel);

inline Rational plausibility(const BeliefFunction& bel, const Subset& a) { return bel.plausibility(a); }

// The belief function of a probability vector (mass on singletons only).
BeliefFunction probability_belief(const Frame& frame, const std::vector<Rational>& probabilities);

enum class AxiomCheckMode {
  kMoebius,  // B0, B1, B2 directly; B3 via nonnegativity of the Moebius inverse
  kDirect,   // B3 literally, for every collection of distinct nonempty subsets
};

inline constexpr std::size_t kMaxDirectCheckFrameSize = 3;

struct AxiomReport {
  bool is_belief_function = false;
  // "B0".."B3", empty on success.
  std::string violated;
  // Moebius mode: the subset with a negative coefficient (B3), or the subset
  // at which B0/B1/B2 fail. Direct mode: the collection A_1..A_k for B3.
  std::vector<Mask> witness;
  std::string detail;
  std::vector<Rational> moebius;
};

// Direct mode requires n <= kMaxDirectCheckFrameSize (FrameTooLarge
// otherwise).
AxiomReport check_belief_axioms(const SetFunction& f, AxiomCheckMode mode);

}  // namespace dsbelief

#endif  // DSBELIEF_SET_FUNCTION_HPP_
