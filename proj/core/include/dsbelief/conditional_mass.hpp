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

#ifndef DSBELIEF_CONDITIONAL_MASS_HPP_
#define DSBELIEF_CONDITIONAL_MASS_HPP_

// Constructive proof that lower-envelope conditioning yields a belief
// function: given a mass function m and an event B with Bel(B) > 0, build a
// mass function m' on 2^B whose subset sums reproduce Bel(.|B).
//
// Focal sets meeting B are split into those inside B (B_1..B_t, weights
// beta) and those straddling B (A'_1..A'_r, with A_j = A'_j ∩ B and weights
// alpha), both normalized by their joint total N. A string B_i A_j1 ... A_jq
// (j1 < ... < jq) gets the value
//
//   m''(B_i A_j1...A_jq) = beta_i / (1 - alpha_j1 - ... - alpha_jq)
//                          - sum over proper substrings Y of the tail of m''(B_i Y)
//
// and m'(C) sums m'' over all strings whose union B_i ∪ A_j1 ∪ ... equals C.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dsbelief/frame.hpp"
#include "dsbelief/rational.hpp"
#include "dsbelief/set_function.hpp"

namespace dsbelief {

// The string alphabet's cost is 2^(straddler count) tails per head.
inline constexpr std::size_t kMaxStraddlers = 16;

struct FocalDecomposition {
  Subset event;
  std::vector<Mask> inside;               // B_i, increasing mask order
  std::vector<Mask> straddling_raw;       // A'_j
  std::vector<Mask> straddling;           // A_j = A'_j ∩ B
  std::vector<Rational> inside_raw;       // beta'_i = m(B_i)
  std::vector<Rational> straddling_raw_weights;  // alpha'_j = m(A'_j)
  Rational normalizer;                    // N
  std::vector<Rational> inside_weights;   // beta_i = beta'_i / N
  std::vector<Rational> straddling_weights;  // alpha_j = alpha'_j / N

  friend bool operator==(const FocalDecomposition&, const FocalDecomposition&) = default;
};

// A head B_i followed by a strictly increasing run of straddler indices.
struct FocalString {
  std::size_t head = 0;
  std::vector<std::size_t> tail;

  // Tail as a bitmask over straddler indices.
  Mask tail_mask() const;
  static FocalString from_mask(std::size_t head, Mask tail_mask);
  // "B1A2A3" with 1-based indices.
  std::string name() const;
  // Throws ParseError.
  static FocalString parse(const std::string& name);
  // B_i ∪ A_j1 ∪ ... as a subset of the original frame.
  Mask represented(const FocalDecomposition& fd) const;

  friend bool operator==(const FocalString&, const FocalString&) = default;
};

// Throws ConditioningUndefined when no focal set lies inside b, and
// LimitExceeded above kMaxStraddlers straddling focal sets.
FocalDecomposition decompose(const MassFunction& m, const Subset& b);

// m'' of one string by the memoized recursion over proper substrings of its
// tail. Throws std::out_of_range for indices outside the decomposition and
// std::logic_error if a denominator is not positive.
Rational m_double_prime(const FocalDecomposition& fd, const FocalString& s);

struct StringMass {
  FocalString string;
  Mask represented = 0;  // in the original frame
  Rational value;

  friend bool operator==(const StringMass&, const StringMass&) = default;
};

// m'' for every string, head-major, tails in increasing mask order.
std::vector<StringMass> m_double_prime_table(const FocalDecomposition& fd);

// m' on the subframe fd.event (see Frame::restrict). Throws InvalidMass if the
// aggregated values fail to be a mass function.
MassFunction conditional_mass(const FocalDecomposition& fd);

// Extends a belief function on the subframe B to the whole frame via
// Bel(C|B) = Bel'(C ∩ B).
SetFunction extend_from_event(const BeliefFunction& sub_belief, const Subset& b);

struct CertificationReport {
  FocalDecomposition decomposition;
  std::vector<StringMass> strings;
  std::optional<MassFunction> conditional_mass;  // absent if m' is not a mass function
  bool certified = false;
  // First subset of the original frame where the construction disagrees with
  // the closed form, if any.
  std::optional<Mask> mismatch;
  std::string detail;

  friend bool operator==(const CertificationReport&, const CertificationReport&) = default;
};

// Runs decompose -> m'' -> m' -> subset sums and checks, exactly:
// m'(empty) = 0, m' >= 0, m' sums to 1, Bel'(B) = 1 and
// Bel'(C ∩ B) = Bel(C|B) from fh_condition for every C.
// Throws ConditioningUndefined when Bel(b) = 0.
CertificationReport certify_conditional_belief(const BeliefFunction& bel, const Subset& b);

}  // namespace dsbelief

#endif  // DSBELIEF_CONDITIONAL_MASS_HPP_
