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

#ifndef DSBELIEF_CONDITIONING_HPP_
#define DSBELIEF_CONDITIONING_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsbelief/frame.hpp"
#include "dsbelief/rational.hpp"
#include "dsbelief/set_function.hpp"

namespace dsbelief {

enum class Rule {
  // Lower envelope of Bayes-conditioned consistent probabilities, Bel(A|B).
  // Defined when Bel(B) > 0.
  kLowerEnvelope,
  // Dempster's rule, Bel(A||B). Defined when Pl(B) > 0.
  kDempster,
};

// "fh" / "ds".
std::string_view rule_tag(Rule rule);
// Accepts "fh" or "ds"; throws ParseError otherwise.
Rule parse_rule(std::string_view tag);

// The full conditional belief function after observing `event`. `belief` is
// always a valid belief function over the original frame.
struct ConditionalReport {
  Rule rule;
  Subset event;
  BeliefFunction belief;

  Rational plausibility(Mask a) const { return belief.plausibility(a); }

  friend bool operator==(const ConditionalReport&, const ConditionalReport&) = default;
};

// Bel(A|B) = Bel(A∩B) / (Bel(A∩B) + Pl(Ā∩B)) for every A. The dual
// Pl(A|B) = Pl(A∩B) / (Pl(A∩B) + Bel(Ā∩B)) follows from the returned belief
// function. Throws ConditioningUndefined when Bel(B) = 0.
ConditionalReport fh_condition(const BeliefFunction& bel, const Subset& b);

// Closed-form plausibility Pl(A|B) for the lower-envelope rule, evaluated
// directly rather than through the dual.
Rational fh_plausibility(const BeliefFunction& bel, Mask a, Mask b);

// Bel(A||B) = (Bel(A ∪ B̄) - Bel(B̄)) / (1 - Bel(B̄)).
// Throws ConditioningUndefined when Pl(B) = 0.
ConditionalReport ds_condition(const BeliefFunction& bel, const Subset& b);

// Pl(A||B) = Pl(A∩B) / Pl(B), evaluated directly.
Rational ds_plausibility(const BeliefFunction& bel, Mask a, Mask b);

ConditionalReport condition(const BeliefFunction& bel, const Subset& b, Rule rule);
// Whether `rule` is defined for `b` on `bel`.
bool is_defined(const BeliefFunction& bel, Mask b, Rule rule);

// Left fold of `rule` over `events`. An empty sequence yields the input with
// event S. ConditioningUndefined carries the index of the failing step.
ConditionalReport iterate(const BeliefFunction& bel, const std::vector<Subset>& events, Rule rule);

struct ContainmentReport {
  Rational fh_belief;       // Bel(A|B)
  Rational ds_belief;       // Bel(A||B)
  Rational ds_plausibility; // Pl(A||B)
  Rational fh_plausibility; // Pl(A|B)
  bool holds = false;       // fh_belief <= ds_belief <= ds_plausibility <= fh_plausibility
};

// Requires Bel(B) > 0, which makes both rules defined.
ContainmentReport containment_check(const BeliefFunction& bel, const Subset& a, const Subset& b);

struct SureThingReport {
  Rational prior;           // Bel(p)
  Rational given_q;         // Bel(p | q) under the rule
  Rational given_not_q;     // Bel(p | not q) under the rule
  bool holds = false;       // prior >= min(given_q, given_not_q)
};

// Throws ConditioningUndefined if the rule is undefined for q or its
// complement.
SureThingReport sure_thing_check(const BeliefFunction& bel, const Subset& p, const Subset& q, Rule rule);

}  // namespace dsbelief

#endif  // DSBELIEF_CONDITIONING_HPP_
