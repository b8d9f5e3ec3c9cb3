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

#include "dsbelief/conditional_mass.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "dsbelief/conditioning.hpp"
#include "dsbelief/errors.hpp"

namespace dsbelief {

Mask FocalString::tail_mask() const {
  Mask m = 0;
  for (std::size_t j : tail) m |= Mask{1} << j;
  return m;
}

FocalString FocalString::from_mask(std::size_t head, Mask tail_mask) {
  FocalString s{head, {}};
  for (std::size_t j = 0; tail_mask >> j; ++j) {
    if ((tail_mask >> j) & 1U) s.tail.push_back(j);
  }
  return s;
}

std::string FocalString::name() const {
  std::string out = "B" + std::to_string(head + 1);
  for (std::size_t j : tail) out += "A" + std::to_string(j + 1);
  return out;
}

FocalString FocalString::parse(const std::string& name) {
  std::size_t pos = 0;
  const auto read_index = [&](char letter) -> std::size_t {
    if (pos >= name.size() || name[pos] != letter) throw ParseError("malformed focal string '" + name + "'");
    ++pos;
    const std::size_t start = pos;
    while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) ++pos;
    if (start == pos) throw ParseError("malformed focal string '" + name + "'");
    const std::size_t index = std::stoul(name.substr(start, pos - start));
    if (index == 0) throw ParseError("focal string indices are 1-based: '" + name + "'");
    return index - 1;
  };
  FocalString s;
  s.head = read_index('B');
  while (pos < name.size()) {
    const std::size_t j = read_index('A');
    if (!s.tail.empty() && j <= s.tail.back()) throw ParseError("focal string tail must increase: '" + name + "'");
    s.tail.push_back(j);
  }
  return s;
}

Mask FocalString::represented(const FocalDecomposition& fd) const {
  Mask m = fd.inside.at(head);
  for (std::size_t j : tail) m |= fd.straddling.at(j);
  return m;
}

FocalDecomposition decompose(const MassFunction& m, const Subset& b) {
  require_same_frame(m.frame(), b.frame(), "decompose");
  FocalDecomposition fd{b, {}, {}, {}, {}, {}, Rational(0), {}, {}};
  const Mask bm = b.bits();
  for (Mask f : m.focal_sets()) {
    if (is_subset_mask(f, bm)) {
      fd.inside.push_back(f);
      fd.inside_raw.push_back(m[f]);
    } else if (f & bm) {
      fd.straddling_raw.push_back(f);
      fd.straddling.push_back(f & bm);
      fd.straddling_raw_weights.push_back(m[f]);
    }
  }
  if (fd.inside.empty()) {
    throw ConditioningUndefined("no focal set lies inside " + b.to_string() + " (Bel(B) = 0)");
  }
  if (fd.straddling.size() > kMaxStraddlers) {
    throw LimitExceeded(std::to_string(fd.straddling.size()) + " straddling focal sets, limit is " +
                        std::to_string(kMaxStraddlers));
  }
  for (const auto& w : fd.inside_raw) fd.normalizer += w;
  for (const auto& w : fd.straddling_raw_weights) fd.normalizer += w;
  for (const auto& w : fd.inside_raw) fd.inside_weights.push_back(w / fd.normalizer);
  for (const auto& w : fd.straddling_raw_weights) fd.straddling_weights.push_back(w / fd.normalizer);
  return fd;
}

namespace {

// beta_i / (1 - sum of alpha_j over the tail). The denominator stays positive
// because beta_i > 0 is part of the same normalized total.
Rational tail_quotient(const FocalDecomposition& fd, std::size_t head, Mask tail) {
  Rational denominator(1);
  for (std::size_t j = 0; j < fd.straddling_weights.size(); ++j) {
    if ((tail >> j) & 1U) denominator -= fd.straddling_weights[j];
  }
  if (!denominator.is_positive()) {
    throw std::logic_error("conditional mass: non-positive denominator " + denominator.to_string());
  }
  return fd.inside_weights[head] / denominator;
}

}  // namespace

Rational m_double_prime(const FocalDecomposition& fd, const FocalString& s) {
  if (s.head >= fd.inside.size()) throw std::out_of_range("focal string head out of range");
  for (std::size_t k = 0; k < s.tail.size(); ++k) {
    if (s.tail[k] >= fd.straddling.size()) throw std::out_of_range("focal string tail index out of range");
    if (k > 0 && s.tail[k] <= s.tail[k - 1]) throw std::invalid_argument("focal string tail must increase");
  }
  std::unordered_map<Mask, Rational> memo;
  const std::function<Rational(Mask)> value = [&](Mask tail) -> Rational {
    if (tail == 0) return fd.inside_weights[s.head];
    if (auto it = memo.find(tail); it != memo.end()) return it->second;
    Rational v = tail_quotient(fd, s.head, tail);
    // Proper substrings of an increasing tail are exactly its proper submasks.
    for (Mask y = (tail - 1) & tail;; y = (y - 1) & tail) {
      v -= value(y);
      if (y == 0) break;
    }
    memo.emplace(tail, v);
    return v;
  };
  return value(s.tail_mask());
}

std::vector<StringMass> m_double_prime_table(const FocalDecomposition& fd) {
  const std::size_t r = fd.straddling.size();
  const std::size_t tails = std::size_t{1} << r;
  std::vector<StringMass> out;
  out.reserve(fd.inside.size() * tails);
  for (std::size_t head = 0; head < fd.inside.size(); ++head) {
    // The recursion says the values over all substrings of a tail T sum to
    // beta_i / (1 - alpha(T)); inverting that subset sum over the tail lattice
    // gives m'' for every tail at once.
    std::vector<Rational> quotient(tails);
    for (Mask t = 0; t < tails; ++t) quotient[t] = tail_quotient(fd, head, t);
    const std::vector<Rational> values = moebius_transform(std::move(quotient));
    for (Mask t = 0; t < tails; ++t) {
      FocalString s = FocalString::from_mask(head, t);
      const Mask rep = s.represented(fd);
      out.push_back(StringMass{std::move(s), rep, values[t]});
    }
  }
  return out;
}

MassFunction conditional_mass(const FocalDecomposition& fd) {
  const Frame sub = fd.event.frame().restrict(fd.event);
  std::vector<Rational> values(sub.subset_count());
  for (const auto& entry : m_double_prime_table(fd)) {
    values[compress_mask(entry.represented, fd.event.bits())] += entry.value;
  }
  return MassFunction(SetFunction(sub, std::move(values)));
}

SetFunction extend_from_event(const BeliefFunction& sub_belief, const Subset& b) {
  const Frame& frame = b.frame();
  if (sub_belief.frame().size() != b.size()) {
    throw FrameMismatch("extend_from_event: subframe size differs from the event size");
  }
  std::vector<Rational> values(frame.subset_count());
  for (Mask c = 0; c < frame.subset_count(); ++c) values[c] = sub_belief[compress_mask(c & b.bits(), b.bits())];
  return SetFunction(frame, std::move(values));
}

CertificationReport certify_conditional_belief(const BeliefFunction& bel, const Subset& b) {
  CertificationReport report{decompose(bel.mass(), b), {}, std::nullopt, false, std::nullopt, ""};
  report.strings = m_double_prime_table(report.decomposition);
  try {
    report.conditional_mass = conditional_mass(report.decomposition);
  } catch (const InvalidMass& e) {
    report.detail = std::string("m' is not a mass function: ") + e.what();
    return report;
  }
  const MassFunction& mp = *report.conditional_mass;
  const BeliefFunction sub_belief = belief_from_mass(mp);
  if (sub_belief[sub_belief.frame().full_mask()] != Rational(1)) {
    report.detail = "Bel'(B) = " + sub_belief[sub_belief.frame().full_mask()].to_string();
    return report;
  }
  const SetFunction extended = extend_from_event(sub_belief, b);
  const ConditionalReport closed = fh_condition(bel, b);
  for (Mask c : canonical_order(bel.frame().size())) {
    if (extended[c] != closed.belief[c]) {
      report.mismatch = c;
      report.detail = "construction gives " + extended[c].to_string() + " but the closed form gives " +
                      closed.belief[c].to_string() + " at " + bel.frame().subset(c).to_string();
      return report;
    }
  }
  report.certified = true;
  report.detail = "certified";
  return report;
}

}  // namespace dsbelief
