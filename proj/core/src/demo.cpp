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

#include "dsbelief/demo.hpp"

#include <iomanip>
#include <sstream>

#include "dsbelief/conditional_mass.hpp"
#include "dsbelief/conditioning.hpp"
#include "dsbelief/credal.hpp"
#include "dsbelief/errors.hpp"

namespace dsbelief {
namespace {

// Generated by: dsbelief_fixture_search noncommute --seed 7 --size 4 --focal 4
constexpr std::string_view kNoncommuteFixture = R"json({
  "format_version": 1,
  "kind": "mass",
  "frame": [
    "a",
    "b",
    "c",
    "d"
  ],
  "events": {
    "A": [
      "a"
    ],
    "B": [
      "a",
      "b",
      "c"
    ],
    "C": [
      "a",
      "c",
      "d"
    ]
  },
  "mass": [
    {
      "set": [
        "a"
      ],
      "value": "2/15"
    },
    {
      "set": [
        "a",
        "d"
      ],
      "value": "4/15"
    },
    {
      "set": [
        "b",
        "d"
      ],
      "value": "1/5"
    },
    {
      "set": [
        "a",
        "b",
        "c"
      ],
      "value": "2/5"
    }
  ]
}
)json";

// Generated by: dsbelief_fixture_search sure-thing --seed 7 --size 4 --focal 3
constexpr std::string_view kSureThingFixture = R"json({
  "format_version": 1,
  "kind": "mass",
  "frame": [
    "a",
    "b",
    "c",
    "d"
  ],
  "events": {
    "p": [
      "b",
      "c"
    ],
    "q": [
      "a",
      "c"
    ]
  },
  "mass": [
    {
      "set": [
        "a"
      ],
      "value": "1/3"
    },
    {
      "set": [
        "b",
        "c"
      ],
      "value": "1/6"
    },
    {
      "set": [
        "b",
        "d"
      ],
      "value": "1/2"
    }
  ]
}
)json";

class Narrative {
 public:
  void title(std::string_view name) { out_ << "== " << name << " ==\n"; }
  void line(std::string_view text) { out_ << text << "\n"; }
  void blank() { out_ << "\n"; }

  void header() {
    out_ << "  " << std::left << std::setw(42) << "quantity" << std::setw(20) << "computed" << std::setw(20)
         << "expected"
         << "status\n";
  }

  void check(std::string_view quantity, const std::string& computed, const std::string& expected) {
    const bool ok = computed == expected;
    all_matched_ = all_matched_ && ok;
    out_ << "  " << std::left << std::setw(42) << quantity << std::setw(20) << computed << std::setw(20) << expected
         << (ok ? "MATCH" : "MISMATCH") << "\n";
  }

  void check(std::string_view quantity, const Rational& computed, const Rational& expected) {
    check(quantity, computed.to_string(), expected.to_string());
  }

  void check(std::string_view quantity, bool computed, bool expected) {
    check(quantity, std::string(computed ? "yes" : "no"), std::string(expected ? "yes" : "no"));
  }

  void value(std::string_view quantity, const std::string& computed) {
    out_ << "  " << std::left << std::setw(42) << quantity << computed << "\n";
  }

  DemoResult finish() {
    out_ << "result: " << (all_matched_ ? "all values match" : "MISMATCH") << "\n";
    return DemoResult{out_.str(), all_matched_};
  }

 private:
  std::ostringstream out_;
  bool all_matched_ = true;
};

std::string mass_listing(const MassFunction& m) {
  std::string out;
  for (Mask f : canonical_order(m.frame().size())) {
    if (m[f].is_zero()) continue;
    out += (out.empty() ? "" : "  ") + m.frame().subset(f).to_string() + "=" + m[f].to_string();
  }
  return out;
}

std::string distribution_listing(const Frame& frame, const Distribution& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out += (i ? ", " : "") + frame.label(i) + "=" + p[i].to_string();
  }
  return out + ")";
}

std::string interval_string(const Interval& iv) { return "[" + iv.lower.to_string() + ", " + iv.upper.to_string() + "]"; }

std::string quadruple_string(const ContainmentReport& c) {
  return "(" + c.fh_belief.to_string() + ", " + c.ds_belief.to_string() + ", " + c.ds_plausibility.to_string() +
         ", " + c.fh_plausibility.to_string() + ")";
}

std::string events_listing(const EventMap& events) {
  std::string out;
  for (const auto& [name, s] : events) out += (out.empty() ? "" : "  ") + name + "=" + s.to_string();
  return out;
}

DemoResult three_prisoners() {
  const Document doc = three_prisoners_document();
  const BeliefFunction bel = belief_from_mass(std::get<MassFunction>(doc.payload));
  const Subset lives_a = doc.events.at("lives-a");
  const Subset says_b = doc.events.at("says-b");
  const Rational third(1, 3);
  const Rational half(1, 2);

  Narrative n;
  n.title("three-prisoners");
  n.line("Outcome xy: prisoner x is pardoned and the jailer names y as executed.");
  n.line("frame:  ab ac bc cb");
  n.line("events: " + events_listing(doc.events));
  n.line("mass:   " + mass_listing(bel.mass()));
  n.blank();
  n.header();
  n.check("Bel(says-b)", bel.at(says_b), third);
  n.check("Pl(says-b)", bel.plausibility(says_b), Rational(2, 3));
  n.check("Bel(lives-a & says-b)", bel.at(lives_a & says_b), Rational(0));
  n.check("Pl(lives-a & says-b)", bel.plausibility(lives_a & says_b), third);

  const ConditionalReport fh = fh_condition(bel, says_b);
  const ConditionalReport ds = ds_condition(bel, says_b);
  n.check("Bel(lives-a | says-b)      [fh]", fh.belief.at(lives_a), Rational(0));
  n.check("Pl(lives-a | says-b)       [fh]", fh.plausibility(lives_a.bits()), half);
  n.check("Bel(lives-a || says-b)     [ds]", ds.belief.at(lives_a), half);
  n.check("Pl(lives-a || says-b)      [ds]", ds.plausibility(lives_a.bits()), half);

  const ContainmentReport chain = containment_check(bel, lives_a, says_b);
  n.check("containment chain", quadruple_string(chain), "(0, 1/2, 1/2, 1/2)");
  n.check("chain ordered", chain.holds, true);

  const CredalSet cs = extreme_points(bel);
  n.check("Pr(says-b) over consistent Pr", interval_string(envelope(cs, says_b)), "[1/3, 2/3]");
  n.check("Pr(lives-a | says-b) over consistent Pr", interval_string(conditional_envelope(cs, lives_a, says_b)),
          "[0, 1/2]");

  const CertificationReport cert = certify_conditional_belief(bel, says_b);
  n.check("m'({cb})", (*cert.conditional_mass)[compress_mask(doc.frame.subset({"cb"}).bits(), says_b.bits())], half);
  n.check("m'({ab,cb})", (*cert.conditional_mass)[compress_mask(says_b.bits(), says_b.bits())], half);
  n.check("conditional belief certified", cert.certified, true);
  return n.finish();
}

DemoResult noncommute() {
  const Document doc = parse_document(kNoncommuteFixture);
  const BeliefFunction bel = belief_from_mass(std::get<MassFunction>(doc.payload));
  const Subset a = doc.events.at("A");
  const Subset b = doc.events.at("B");
  const Subset c = doc.events.at("C");

  Narrative n;
  n.title("noncommute");
  n.line("Stored fixture (seeded search, n = 4).");
  n.line("events: " + events_listing(doc.events));
  n.line("mass:   " + mass_listing(bel.mass()));
  n.blank();
  n.header();
  struct Expected {
    Rule rule;
    Rational b_then_c;
    Rational c_then_b;
    Rational joint;
  };
  const Expected expected[] = {
      {Rule::kLowerEnvelope, Rational(8, 41), Rational(4, 19), Rational(1, 4)},
      {Rule::kDempster, Rational(1, 2), Rational(1, 2), Rational(1, 2)},
  };
  for (const Expected& e : expected) {
    const std::string tag = "[" + std::string(rule_tag(e.rule)) + "]";
    const Rational bc = iterate(bel, {b, c}, e.rule).belief.at(a);
    const Rational cb = iterate(bel, {c, b}, e.rule).belief.at(a);
    const Rational joint = condition(bel, b & c, e.rule).belief.at(a);
    n.check("Bel(A) after B then C        " + tag, bc, e.b_then_c);
    n.check("Bel(A) after C then B        " + tag, cb, e.c_then_b);
    n.check("Bel(A) after B & C           " + tag, joint, e.joint);
    const bool all_equal = bc == cb && cb == joint;
    const bool pairwise_distinct = bc != cb && bc != joint && cb != joint;
    if (e.rule == Rule::kLowerEnvelope) {
      n.check("three orders pairwise distinct " + tag, pairwise_distinct, true);
    } else {
      n.check("three orders agree           " + tag, all_equal, true);
    }
  }
  return n.finish();
}

DemoResult sure_thing() {
  const Document doc = parse_document(kSureThingFixture);
  const BeliefFunction bel = belief_from_mass(std::get<MassFunction>(doc.payload));
  const Subset p = doc.events.at("p");
  const Subset q = doc.events.at("q");

  Narrative n;
  n.title("sure-thing");
  n.line("Principle: Bel(p) >= min(Bel(p given q), Bel(p given not q)).");
  n.line("Stored fixture (seeded search, n = 4).");
  n.line("events: " + events_listing(doc.events));
  n.line("mass:   " + mass_listing(bel.mass()));
  n.blank();
  n.header();
  n.check("Bel(p)", bel.at(p), Rational(1, 6));
  struct Expected {
    Rule rule;
    Rational given_q;
    Rational given_not_q;
    bool holds;
  };
  const Expected expected[] = {
      {Rule::kDempster, Rational(1, 3), Rational(1, 4), false},
      {Rule::kLowerEnvelope, Rational(0), Rational(0), true},
  };
  for (const Expected& e : expected) {
    const std::string tag = "[" + std::string(rule_tag(e.rule)) + "]";
    const SureThingReport r = sure_thing_check(bel, p, q, e.rule);
    n.check("Bel(p given q)               " + tag, r.given_q, e.given_q);
    n.check("Bel(p given not q)           " + tag, r.given_not_q, e.given_not_q);
    n.check("principle holds              " + tag, r.holds, e.holds);
  }
  return n.finish();
}

// Checks FH on P and DS on P' for every A; returns the number of subsets.
std::size_t beehive_sweep(Narrative& n, const PartitionScenario& ps, const Subset& b, const std::string& label) {
  const BeliefFunction bel = partition_belief(ps);
  const CredalSet original = partition_credal(ps);
  const CredalSet redistributed = redistribution_credal(ps, b);
  const ConditionalReport fh = fh_condition(bel, b);
  const ConditionalReport ds = ds_condition(bel, b);
  const Frame& frame = ps.frame();
  std::size_t fh_agree = 0;
  std::size_t ds_agree = 0;
  for (Mask a = 0; a < frame.subset_count(); ++a) {
    const Interval on_p = conditional_envelope(original, frame.subset(a), b);
    const Interval on_p2 = conditional_envelope(redistributed, frame.subset(a), b);
    if (on_p == Interval{fh.belief[a], fh.plausibility(a)}) ++fh_agree;
    if (on_p2 == Interval{ds.belief[a], ds.plausibility(a)}) ++ds_agree;
  }
  const std::string total = std::to_string(frame.subset_count());
  n.check(label + ": P envelope = fh (subsets)", std::to_string(fh_agree), total);
  n.check(label + ": P' envelope = ds (subsets)", std::to_string(ds_agree), total);
  return frame.subset_count();
}

DemoResult beehive() {
  Narrative n;
  n.title("beehive");
  n.line("Cell X_i is drawn with probability a_i, then an element of it by an unknown");
  n.line("process (credal set P). In P' the process lands in B whenever the cell");
  n.line("meets B, so a straddling cell's weight moves onto X_i & B.");
  n.blank();

  const Document doc = three_prisoners_document();
  const PartitionScenario ps = three_prisoners_partition();
  const Subset lives_a = doc.events.at("lives-a");
  const Subset says_b = doc.events.at("says-b");
  std::string cells;
  for (std::size_t i = 0; i < ps.cells.size(); ++i) {
    cells += (i ? "  " : "") + ps.cells[i].to_string() + "=" + ps.weights[i].to_string();
  }
  n.line("three prisoners cells: " + cells + "   B = says-b");
  const CredalSet redistributed = redistribution_credal(ps, says_b);
  for (const auto& v : redistributed.vertices()) n.line("  P' vertex " + distribution_listing(doc.frame, v));
  n.blank();
  n.header();
  n.check("Pr(lives-a | says-b) over P", interval_string(conditional_envelope(partition_credal(ps), lives_a, says_b)),
          "[0, 1/2]");
  n.check("Pr(lives-a | says-b) over P'",
          interval_string(conditional_envelope(redistributed, lives_a, says_b)), "[1/2, 1/2]");
  beehive_sweep(n, ps, says_b, "prisoners");

  const Frame five = Frame::letters(5);
  const PartitionScenario hive{{five.subset({"a", "b"}), five.subset({"c"}), five.subset({"d", "e"})},
                               {Rational(1, 2), Rational(1, 4), Rational(1, 4)}};
  const Subset b = five.subset({"a", "c", "d"});
  n.blank();
  n.line("five cells: {a,b}=1/2  {c}=1/4  {d,e}=1/4   B = {a,c,d}");
  n.header();
  beehive_sweep(n, hive, b, "five");
  return n.finish();
}

DemoResult lost_info() {
  const Frame frame = Frame::letters(3);
  const CredalSet polytope = polytope_vertices(three_point_constraints(frame), frame);
  const EnvelopeReport env = envelope_setfunction(polytope);
  const Subset a = frame.subset({"a"});
  const Subset b = frame.subset({"b"});

  Narrative n;
  n.title("lost-info");
  n.line("P = {Pr : 1/4 <= Pr(a) <= 1/2, 1/4 <= Pr(b) <= 1/2, Pr(a) = Pr(b)} on {a,b,c}");
  for (const auto& v : polytope.vertices()) n.line("  vertex " + distribution_listing(frame, v));
  n.blank();
  n.header();
  n.check("lower envelope is a belief function", env.verdict.is_belief_function, true);
  const BeliefFunction bel(env.lower);
  n.check("Bel({a})", bel.at(a), Rational(1, 4));
  n.check("Bel({b})", bel.at(b), Rational(1, 4));
  n.check("Pl({a})", bel.plausibility(a), Rational(1, 2));
  n.check("Pl({b})", bel.plausibility(b), Rational(1, 2));
  n.value("envelope mass", mass_listing(bel.mass()));

  // A distribution consistent with the envelope but outside P.
  const CredalSet consistent = extreme_points(bel);
  const Distribution* witness = nullptr;
  for (const auto& v : consistent.vertices()) {
    if (v[0] != v[1]) {
      witness = &v;
      break;
    }
  }
  n.check("consistent Pr with Pr(a) != Pr(b) exists", witness != nullptr, true);
  if (witness) n.value("  for example", distribution_listing(frame, *witness));
  return n.finish();
}

}  // namespace

const std::vector<std::string_view>& demo_names() {
  static const std::vector<std::string_view> names = {"three-prisoners", "noncommute", "sure-thing", "beehive",
                                                      "lost-info"};
  return names;
}

DemoResult run_demo(std::string_view name) {
  if (name == "three-prisoners") return three_prisoners();
  if (name == "noncommute") return noncommute();
  if (name == "sure-thing") return sure_thing();
  if (name == "beehive") return beehive();
  if (name == "lost-info") return lost_info();
  throw ParseError("unknown demo '" + std::string(name) + "'");
}

Document three_prisoners_document() {
  const Frame frame({"ab", "ac", "bc", "cb"});
  EventMap events{{"lives-a", frame.subset({"ab", "ac"})}, {"lives-b", frame.subset({"bc"})},
                  {"lives-c", frame.subset({"cb"})},       {"says-b", frame.subset({"ab", "cb"})},
                  {"says-c", frame.subset({"ac", "bc"})}};
  const Rational third(1, 3);
  MassFunction m = MassFunction::from_focal(
      frame, {{events.at("lives-b"), third}, {events.at("lives-c"), third}, {events.at("lives-a"), third}});
  return Document{frame, std::move(events), std::move(m)};
}

PartitionScenario three_prisoners_partition() {
  const Document doc = three_prisoners_document();
  const Rational third(1, 3);
  return PartitionScenario{{doc.events.at("lives-b"), doc.events.at("lives-c"), doc.events.at("lives-a")},
                           {third, third, third}};
}

std::vector<LinearConstraint> three_point_constraints(const Frame& frame) {
  const Subset a = frame.singleton(0);
  const Subset b = frame.singleton(1);
  LinearConstraint same;
  same.coefficients.assign(frame.size(), Rational(0));
  same.coefficients[0] = 1;
  same.coefficients[1] = -1;
  same.relation = Relation::kEqual;
  same.bound = 0;
  return {LinearConstraint::on_subset(a, Relation::kGreaterEqual, Rational(1, 4)),
          LinearConstraint::on_subset(a, Relation::kLessEqual, Rational(1, 2)),
          LinearConstraint::on_subset(b, Relation::kGreaterEqual, Rational(1, 4)),
          LinearConstraint::on_subset(b, Relation::kLessEqual, Rational(1, 2)),
          same};
}

std::string_view noncommute_fixture_json() { return kNoncommuteFixture; }
std::string_view sure_thing_fixture_json() { return kSureThingFixture; }

}  // namespace dsbelief
