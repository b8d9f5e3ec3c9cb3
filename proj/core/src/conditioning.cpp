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

#include "dsbelief/conditioning.hpp"

#include "dsbelief/errors.hpp"

namespace dsbelief {

std::string_view rule_tag(Rule rule) { return rule == Rule::kLowerEnvelope ? "fh" : "ds"; }

Rule parse_rule(std::string_view tag) {
  if (tag == "fh") return Rule::kLowerEnvelope;
  if (tag == "ds") return Rule::kDempster;
  throw ParseError("unknown conditioning rule '" + std::string(tag) + "' (expected fh or ds)");
}

bool is_defined(const BeliefFunction& bel, Mask b, Rule rule) {
  return rule == Rule::kLowerEnvelope ? bel[b].is_positive() : bel.plausibility(b).is_positive();
}

ConditionalReport fh_condition(const BeliefFunction& bel, const Subset& b) {
  require_same_frame(bel.frame(), b.frame(), "fh_condition");
  if (!bel[b.bits()].is_positive()) {
    throw ConditioningUndefined("lower-envelope conditioning on " + b.to_string() + " requires Bel(B) > 0");
  }
  const Frame& frame = bel.frame();
  const Mask full = frame.full_mask();
  const Mask bm = b.bits();
  std::vector<Rational> values(frame.subset_count());
  for (Mask a = 0; a < frame.subset_count(); ++a) {
    const Rational& inside = bel[a & bm];
    // Bel(B) > 0 keeps the denominator positive: it bounds Pr(B) from below
    // for every consistent Pr, and Bel(A∩B) + Pl(Ā∩B) >= Pr(A∩B) + Pr(Ā∩B).
    values[a] = inside / (inside + bel.plausibility(~a & full & bm));
  }
  return ConditionalReport{Rule::kLowerEnvelope, b, BeliefFunction(SetFunction(frame, std::move(values)))};
}

Rational fh_plausibility(const BeliefFunction& bel, Mask a, Mask b) {
  const Mask full = bel.frame().full_mask();
  const Rational pl = bel.plausibility(a & b);
  return pl / (pl + bel[~a & full & b]);
}

ConditionalReport ds_condition(const BeliefFunction& bel, const Subset& b) {
  require_same_frame(bel.frame(), b.frame(), "ds_condition");
  const Frame& frame = bel.frame();
  const Mask full = frame.full_mask();
  const Mask outside = full & ~b.bits();
  const Rational denominator = Rational(1) - bel[outside];
  if (!denominator.is_positive()) {
    throw ConditioningUndefined("Dempster conditioning on " + b.to_string() + " requires Pl(B) > 0");
  }
  std::vector<Rational> values(frame.subset_count());
  for (Mask a = 0; a < frame.subset_count(); ++a) {
    values[a] = (bel[a | outside] - bel[outside]) / denominator;
  }
  return ConditionalReport{Rule::kDempster, b, BeliefFunction(SetFunction(frame, std::move(values)))};
}

Rational ds_plausibility(const BeliefFunction& bel, Mask a, Mask b) {
  return bel.plausibility(a & b) / bel.plausibility(b);
}

ConditionalReport condition(const BeliefFunction& bel, const Subset& b, Rule rule) {
  return rule == Rule::kLowerEnvelope ? fh_condition(bel, b) : ds_condition(bel, b);
}

ConditionalReport iterate(const BeliefFunction& bel, const std::vector<Subset>& events, Rule rule) {
  ConditionalReport current{rule, bel.frame().full(), bel};
  for (std::size_t step = 0; step < events.size(); ++step) {
    try {
      current = condition(current.belief, events[step], rule);
    } catch (const ConditioningUndefined& e) {
      throw ConditioningUndefined(e.what(), step);
    }
  }
  return current;
}

ContainmentReport containment_check(const BeliefFunction& bel, const Subset& a, const Subset& b) {
  require_same_frame(bel.frame(), a.frame(), "containment_check");
  if (!bel[b.bits()].is_positive()) {
    throw ConditioningUndefined("containment check on " + b.to_string() + " requires Bel(B) > 0");
  }
  const ConditionalReport fh = fh_condition(bel, b);
  const ConditionalReport ds = ds_condition(bel, b);
  ContainmentReport out{fh.belief[a.bits()], ds.belief[a.bits()], ds.plausibility(a.bits()),
                        fh.plausibility(a.bits())};
  out.holds = out.fh_belief <= out.ds_belief && out.ds_belief <= out.ds_plausibility &&
              out.ds_plausibility <= out.fh_plausibility;
  return out;
}

SureThingReport sure_thing_check(const BeliefFunction& bel, const Subset& p, const Subset& q, Rule rule) {
  require_same_frame(bel.frame(), p.frame(), "sure_thing_check");
  const Mask pm = p.bits();
  SureThingReport out{bel[pm], condition(bel, q, rule).belief[pm], condition(bel, q.complement(), rule).belief[pm]};
  out.holds = out.prior >= min(out.given_q, out.given_not_q);
  return out;
}

}  // namespace dsbelief
