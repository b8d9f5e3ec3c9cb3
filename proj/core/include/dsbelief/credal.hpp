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

#ifndef DSBELIEF_CREDAL_HPP_
#define DSBELIEF_CREDAL_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "dsbelief/frame.hpp"
#include "dsbelief/rational.hpp"
#include "dsbelief/set_function.hpp"

namespace dsbelief {

// Probability vector over the frame's elements.
using Distribution = std::vector<Rational>;

// Pr(A) for the distribution `p`.
Rational probability_of(const Distribution& p, Mask a);

// A polytope of distributions given by its vertex list. Vertices are kept
// deduplicated and lexicographically sorted, so two credal sets with the same
// vertex set compare (and serialize) identically.
class CredalSet {
 public:
  // Throws std::invalid_argument for an empty vertex list, a vertex of the
  // wrong length, a negative coordinate, or coordinates not summing to 1.
  CredalSet(Frame frame, std::vector<Distribution> vertices);

  const Frame& frame() const { return frame_; }
  const std::vector<Distribution>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool contains_vertex(const Distribution& p) const;

  friend bool operator==(const CredalSet&, const CredalSet&) = default;

 private:
  Frame frame_;
  std::vector<Distribution> vertices_;
};

struct Interval {
  Rational lower;
  Rational upper;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Permutation enumeration grows as n!.
inline constexpr std::size_t kMaxPermutationFrameSize = 7;
// Active-set enumeration grows with the number of constraint subsets.
inline constexpr std::size_t kMaxPolytopeFrameSize = 5;

// Vertices of the set of distributions consistent with `bel`. For every
// ordering of the frame, each focal set's mass goes to its earliest member;
// the distinct results are the extreme points. Throws FrameTooLarge above
// kMaxPermutationFrameSize.
CredalSet extreme_points(const BeliefFunction& bel);

// (min, max) of Pr(A) over the vertices.
Interval envelope(const CredalSet& cs, const Subset& a);

// (min, max) of Pr(A∩B) / Pr(B) over the vertices.
//
// Pr(A∩B)/Pr(B) is a ratio of two linear functions of Pr with a positive
// denominator on the polytope, so each of its level sets is a hyperplane
// section and the extrema over a polytope are attained at vertices. Throws
// ConditioningUndefined if some vertex has Pr(B) = 0.
Interval conditional_envelope(const CredalSet& cs, const Subset& a, const Subset& b);

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

std::string_view relation_symbol(Relation r);
// Accepts "<=", "=", ">="; throws ParseError otherwise.
Relation parse_relation(std::string_view symbol);

// coefficients · Pr  (relation)  bound.
struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kEqual;
  Rational bound;

  // Constraint on Pr(s).
  static LinearConstraint on_subset(const Subset& s, Relation relation, Rational bound);
  bool satisfied_by(const Distribution& p) const;

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

// All vertices of {Pr in the simplex : constraints hold}, found by solving
// every choice of n - rank(equalities) tight inequalities (nonnegativity
// included) together with the equalities, and keeping the feasible unique
// solutions. Throws InfeasibleConstraints when the region is empty and
// FrameTooLarge above kMaxPolytopeFrameSize.
CredalSet polytope_vertices(const std::vector<LinearConstraint>& constraints, const Frame& frame);

struct EnvelopeReport {
  SetFunction lower;
  AxiomReport verdict;
};

// Lower envelope on every subset plus a belief-function verdict.
EnvelopeReport envelope_setfunction(const CredalSet& cs);

// The frame is split into cells X_1..X_k; cell X_i is chosen with
// probability a_i and then an element inside it by an unknown process.
struct PartitionScenario {
  std::vector<Subset> cells;
  std::vector<Rational> weights;

  const Frame& frame() const { return cells.front().frame(); }
  // Throws InvalidScenario.
  void validate() const;

  friend bool operator==(const PartitionScenario&, const PartitionScenario&) = default;
};

// Mass a_i on each cell X_i.
BeliefFunction partition_belief(const PartitionScenario& ps);

// {Pr : Pr(X_i) = a_i}: a product of one sub-simplex per cell.
CredalSet partition_credal(const PartitionScenario& ps);

// The credal set after the process is told to land in `b` whenever it can:
// a cell meeting both b and its complement spreads its weight over X_i∩b
// only, other cells over all of X_i. Throws ConditioningUndefined if no cell
// meets b.
CredalSet redistribution_credal(const PartitionScenario& ps, const Subset& b);

}  // namespace dsbelief

#endif  // DSBELIEF_CREDAL_HPP_
