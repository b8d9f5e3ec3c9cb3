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

#include "dsbelief/credal.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "dsbelief/errors.hpp"

namespace dsbelief {

Rational probability_of(const Distribution& p, Mask a) {
  Rational total;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if ((a >> i) & 1U) total += p[i];
  }
  return total;
}

CredalSet::CredalSet(Frame frame, std::vector<Distribution> vertices)
    : frame_(std::move(frame)), vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("CredalSet: no vertices");
  for (const auto& v : vertices_) {
    if (v.size() != frame_.size()) throw std::invalid_argument("CredalSet: vertex length differs from frame size");
    Rational total;
    for (const auto& x : v) {
      if (x.is_negative()) throw std::invalid_argument("CredalSet: negative probability " + x.to_string());
      total += x;
    }
    if (total != Rational(1)) throw std::invalid_argument("CredalSet: vertex sums to " + total.to_string());
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool CredalSet::contains_vertex(const Distribution& p) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), p);
}

CredalSet extreme_points(const BeliefFunction& bel) {
  const Frame& frame = bel.frame();
  const std::size_t n = frame.size();
  if (n > kMaxPermutationFrameSize) throw FrameTooLarge(n, kMaxPermutationFrameSize, "extreme_points");

  const std::vector<Mask> focal = bel.mass().focal_sets();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Distribution> vertices;
  do {
    Distribution p(n);
    for (Mask f : focal) {
      for (std::size_t e : order) {
        if ((f >> e) & 1U) {
          p[e] += bel.mass()[f];
          break;
        }
      }
    }
    vertices.push_back(std::move(p));
  } while (std::next_permutation(order.begin(), order.end()));
  return CredalSet(frame, std::move(vertices));
}

Interval envelope(const CredalSet& cs, const Subset& a) {
  require_same_frame(cs.frame(), a.frame(), "envelope");
  Interval out{probability_of(cs.vertices().front(), a.bits()), probability_of(cs.vertices().front(), a.bits())};
  for (const auto& v : cs.vertices()) {
    const Rational pa = probability_of(v, a.bits());
    if (pa < out.lower) out.lower = pa;
    if (pa > out.upper) out.upper = pa;
  }
  return out;
}

Interval conditional_envelope(const CredalSet& cs, const Subset& a, const Subset& b) {
  require_same_frame(cs.frame(), a.frame(), "conditional_envelope");
  require_same_frame(cs.frame(), b.frame(), "conditional_envelope");
  const Mask ab = a.bits() & b.bits();
  std::optional<Interval> out;
  for (const auto& v : cs.vertices()) {
    const Rational pb = probability_of(v, b.bits());
    if (!pb.is_positive()) {
      throw ConditioningUndefined("conditional envelope on " + b.to_string() + ": a vertex gives Pr(B) = 0");
    }
    const Rational ratio = probability_of(v, ab) / pb;
    if (!out) {
      out = Interval{ratio, ratio};
    } else if (ratio < out->lower) {
      out->lower = ratio;
    } else if (ratio > out->upper) {
      out->upper = ratio;
    }
  }
  return *out;
}

std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kEqual:
      return "=";
    case Relation::kGreaterEqual:
      return ">=";
  }
  return "=";
}

Relation parse_relation(std::string_view symbol) {
  if (symbol == "<=") return Relation::kLessEqual;
  if (symbol == "=" || symbol == "==") return Relation::kEqual;
  if (symbol == ">=") return Relation::kGreaterEqual;
  throw ParseError("unknown relation '" + std::string(symbol) + "'");
}

LinearConstraint LinearConstraint::on_subset(const Subset& s, Relation relation, Rational bound) {
  LinearConstraint c;
  c.coefficients.resize(s.frame().size());
  for (std::size_t i = 0; i < s.frame().size(); ++i) c.coefficients[i] = s.contains(i) ? 1 : 0;
  c.relation = relation;
  c.bound = std::move(bound);
  return c;
}

bool LinearConstraint::satisfied_by(const Distribution& p) const {
  Rational lhs;
  for (std::size_t i = 0; i < p.size(); ++i) lhs += coefficients[i] * p[i];
  switch (relation) {
    case Relation::kLessEqual:
      return lhs <= bound;
    case Relation::kEqual:
      return lhs == bound;
    case Relation::kGreaterEqual:
      return lhs >= bound;
  }
  return false;
}

namespace {

// One row of an equation system: coefficients · x = rhs.
struct Row {
  std::vector<Rational> coefficients;
  Rational rhs;
};

// Gauss-Jordan elimination in place. Returns the rank of the coefficient
// part; sets `consistent` to false when a zero row has a nonzero rhs.
std::size_t eliminate(std::vector<Row>& rows, std::size_t columns, bool& consistent) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot].coefficients[col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational lead = rows[rank].coefficients[col];
    for (auto& x : rows[rank].coefficients) x /= lead;
    rows[rank].rhs /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r].coefficients[col].is_zero()) continue;
      const Rational factor = rows[r].coefficients[col];
      for (std::size_t c = 0; c < columns; ++c) rows[r].coefficients[c] -= factor * rows[rank].coefficients[c];
      rows[r].rhs -= factor * rows[rank].rhs;
    }
    ++rank;
  }
  consistent = true;
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!rows[r].rhs.is_zero()) consistent = false;
  }
  return rank;
}

// Unique solution of `rows` if the system has full column rank.
std::optional<Distribution> solve_unique(std::vector<Row> rows, std::size_t columns) {
  bool consistent = false;
  if (eliminate(rows, columns, consistent) != columns || !consistent) return std::nullopt;
  Distribution x(columns);
  for (std::size_t r = 0; r < columns; ++r) {
    for (std::size_t c = 0; c < columns; ++c) {
      if (!rows[r].coefficients[c].is_zero()) {
        x[c] = rows[r].rhs;
        break;
      }
    }
  }
  return x;
}

// Advances `pick` (strictly increasing indices into [0, total)) to the next
// combination; false after the last one.
bool next_combination(std::vector<std::size_t>& pick, std::size_t total) {
  const std::size_t k = pick.size();
  for (std::size_t i = k; i-- > 0;) {
    if (pick[i] < total - k + i) {
      ++pick[i];
      for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

CredalSet polytope_vertices(const std::vector<LinearConstraint>& constraints, const Frame& frame) {
  const std::size_t n = frame.size();
  if (n > kMaxPolytopeFrameSize) throw FrameTooLarge(n, kMaxPolytopeFrameSize, "polytope_vertices");

  std::vector<Row> equalities;
  std::vector<Row> inequalities;  // stored as coefficients · x <= rhs
  std::vector<LinearConstraint> all = constraints;
  equalities.push_back({std::vector<Rational>(n, Rational(1)), Rational(1)});
  for (std::size_t i = 0; i < n; ++i) {
    LinearConstraint nonneg;
    nonneg.coefficients.assign(n, Rational(0));
    nonneg.coefficients[i] = 1;
    nonneg.relation = Relation::kGreaterEqual;
    nonneg.bound = 0;
    all.push_back(std::move(nonneg));
  }
  for (const auto& c : all) {
    if (c.coefficients.size() != n) {
      throw std::invalid_argument("polytope_vertices: constraint has " + std::to_string(c.coefficients.size()) +
                                  " coefficients for a frame of size " + std::to_string(n));
    }
    switch (c.relation) {
      case Relation::kEqual:
        equalities.push_back({c.coefficients, c.bound});
        break;
      case Relation::kLessEqual:
        inequalities.push_back({c.coefficients, c.bound});
        break;
      case Relation::kGreaterEqual: {
        Row r{c.coefficients, -c.bound};
        for (auto& x : r.coefficients) x = -x;
        inequalities.push_back(std::move(r));
        break;
      }
    }
  }

  std::vector<Row> reduced = equalities;
  bool consistent = false;
  const std::size_t rank = eliminate(reduced, n, consistent);
  if (!consistent) throw InfeasibleConstraints("equality constraints are inconsistent");
  reduced.resize(rank);

  const std::size_t need = n - rank;
  const auto feasible = [&](const Distribution& x) {
    return std::all_of(all.begin(), all.end(), [&](const LinearConstraint& c) { return c.satisfied_by(x); }) &&
           probability_of(x, frame.full_mask()) == Rational(1);
  };

  std::vector<Distribution> vertices;
  if (need == 0) {
    if (auto x = solve_unique(reduced, n); x && feasible(*x)) vertices.push_back(std::move(*x));
  } else if (need <= inequalities.size()) {
    std::vector<std::size_t> pick(need);
    std::iota(pick.begin(), pick.end(), 0);
    do {
      std::vector<Row> system = reduced;
      for (std::size_t i : pick) system.push_back(inequalities[i]);
      if (auto x = solve_unique(std::move(system), n); x && feasible(*x)) vertices.push_back(std::move(*x));
    } while (next_combination(pick, inequalities.size()));
  }
  if (vertices.empty()) throw InfeasibleConstraints("constraint system has no solution in the probability simplex");
  return CredalSet(frame, std::move(vertices));
}

EnvelopeReport envelope_setfunction(const CredalSet& cs) {
  const Frame& frame = cs.frame();
  std::vector<Rational> lower(frame.subset_count());
  for (Mask a = 0; a < frame.subset_count(); ++a) lower[a] = envelope(cs, frame.subset(a)).lower;
  SetFunction f(frame, std::move(lower));
  AxiomReport verdict = check_belief_axioms(f, AxiomCheckMode::kMoebius);
  return EnvelopeReport{std::move(f), std::move(verdict)};
}

void PartitionScenario::validate() const {
  if (cells.empty()) throw InvalidScenario("partition has no cells");
  if (cells.size() != weights.size()) throw InvalidScenario("partition needs one weight per cell");
  const Frame& f = frame();
  Mask covered = 0;
  Rational total;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!(cells[i].frame() == f)) throw InvalidScenario("partition cells belong to different frames");
    if (cells[i].empty()) throw InvalidScenario("partition cell " + std::to_string(i) + " is empty");
    if (covered & cells[i].bits()) throw InvalidScenario("partition cells overlap at " + cells[i].to_string());
    covered |= cells[i].bits();
    if (!weights[i].is_positive()) throw InvalidScenario("partition weight " + weights[i].to_string() + " is not positive");
    total += weights[i];
  }
  if (covered != f.full_mask()) throw InvalidScenario("partition cells do not cover the frame");
  if (total != Rational(1)) throw InvalidScenario("partition weights sum to " + total.to_string());
}

BeliefFunction partition_belief(const PartitionScenario& ps) {
  ps.validate();
  std::vector<std::pair<Subset, Rational>> focal;
  for (std::size_t i = 0; i < ps.cells.size(); ++i) focal.emplace_back(ps.cells[i], ps.weights[i]);
  return belief_from_mass(MassFunction::from_focal(ps.frame(), focal));
}

namespace {

// Vertices of the product of simplices: cell i puts all of weights[i] on one
// element of supports[i].
CredalSet product_of_simplices(const Frame& frame, const std::vector<Mask>& supports,
                               const std::vector<Rational>& weights) {
  std::vector<std::vector<std::size_t>> choices(supports.size());
  for (std::size_t i = 0; i < supports.size(); ++i) {
    for (std::size_t e = 0; e < frame.size(); ++e) {
      if ((supports[i] >> e) & 1U) choices[i].push_back(e);
    }
  }
  std::vector<Distribution> vertices;
  std::vector<std::size_t> digit(supports.size(), 0);
  while (true) {
    Distribution p(frame.size());
    for (std::size_t i = 0; i < supports.size(); ++i) p[choices[i][digit[i]]] += weights[i];
    vertices.push_back(std::move(p));
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == choices[i].size()) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return CredalSet(frame, std::move(vertices));
}

}  // namespace

CredalSet partition_credal(const PartitionScenario& ps) {
  ps.validate();
  std::vector<Mask> supports;
  for (const auto& c : ps.cells) supports.push_back(c.bits());
  return product_of_simplices(ps.frame(), supports, ps.weights);
}

CredalSet redistribution_credal(const PartitionScenario& ps, const Subset& b) {
  ps.validate();
  require_same_frame(ps.frame(), b.frame(), "redistribution_credal");
  std::vector<Mask> supports;
  bool meets_b = false;
  for (const auto& c : ps.cells) {
    const Mask in = c.bits() & b.bits();
    const bool straddles = in != 0 && in != c.bits();
    supports.push_back(straddles ? in : c.bits());
    meets_b = meets_b || in != 0;
  }
  if (!meets_b) {
    throw ConditioningUndefined("redistribution on " + b.to_string() + ": every member gives Pr(B) = 0");
  }
  return product_of_simplices(ps.frame(), supports, ps.weights);
}

}  // namespace dsbelief
