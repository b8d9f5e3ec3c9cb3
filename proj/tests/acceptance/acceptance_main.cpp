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

// Acceptance gate. Runs every acceptance criterion at its stated tolerance and
// runtime budget and prints one PASS/FAIL line per criterion. All comparisons
// are exact rational equalities.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dsbelief/conditional_mass.hpp"
#include "dsbelief/conditioning.hpp"
#include "dsbelief/credal.hpp"
#include "dsbelief/demo.hpp"
#include "dsbelief/document.hpp"
#include "dsbelief/errors.hpp"
#include "dsbelief/random.hpp"

namespace {

using namespace dsbelief;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

// Every mass function any sweep generates, for the round-trip criterion.
std::vector<MassFunction> g_generated;

BeliefFunction remember(BeliefFunction bel) {
  g_generated.push_back(bel.mass());
  return bel;
}

std::string data_path(const std::string& relative) { return std::string(DSBELIEF_TEST_DATA_DIR) + "/" + relative; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string where(const Frame& f, const char* what, Mask a, Mask b) {
  return std::string(what) + " at A=" + f.subset(a).to_string() + ", B=" + f.subset(b).to_string();
}

Mask random_mask(Rng& rng, const Frame& f, Mask lo = 1) {
  return static_cast<Mask>(rng.uniform(lo, f.full_mask()));
}

// Criterion 1.
Outcome three_prisoners() {
  Outcome o;
  const Document doc = three_prisoners_document();
  const BeliefFunction bel = belief_from_mass(std::get<MassFunction>(doc.payload));
  const Subset says_b = doc.events.at("says-b");
  const Mask lives_a = doc.events.at("lives-a").bits();
  const ConditionalReport fh = fh_condition(bel, says_b);
  const ConditionalReport ds = ds_condition(bel, says_b);
  o.require(bel.at(says_b) == Rational(1, 3), "Bel(says-b) != 1/3");
  o.require(bel.plausibility(says_b) == Rational(2, 3), "Pl(says-b) != 2/3");
  o.require(fh.belief[lives_a] == Rational(0), "Bel(lives-a|says-b) != 0");
  o.require(fh.plausibility(lives_a) == Rational(1, 2), "Pl(lives-a|says-b) != 1/2");
  o.require(ds.belief[lives_a] == Rational(1, 2), "Bel(lives-a||says-b) != 1/2");
  o.require(ds.plausibility(lives_a) == Rational(1, 2), "Pl(lives-a||says-b) != 1/2");
  if (o.pass) o.detail = "Bel=1/3 Pl=2/3; fh (0, 1/2); ds (1/2, 1/2)";
  return o;
}

// Criterion 2.
Outcome envelope_equivalence() {
  Outcome o;
  constexpr int kCount = 200;
  std::size_t subsets = 0;
  for (int i = 0; i < kCount && o.pass; ++i) {
    Rng rng(1000 + i);
    const std::size_t n = 1 + i % 6;
    const BeliefFunction bel = remember(random_belief(rng, n, 1 + rng.uniform(0, 7)));
    const CredalSet cs = extreme_points(bel);
    const Frame& f = bel.frame();
    for (Mask a = 0; a < f.subset_count(); ++a, ++subsets) {
      const Interval iv = envelope(cs, f.subset(a));
      if (iv.lower != bel[a] || iv.upper != bel.plausibility(a)) {
        o.require(false, "seed " + std::to_string(1000 + i) + ": envelope differs at " + f.subset(a).to_string());
        break;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(kCount) + " belief functions, n=1..6, " + std::to_string(subsets) + " subsets";
  return o;
}

struct ConditionalSweep {
  Outcome oracle;       // criterion 3
  Outcome containment;  // criterion 5
};

// Criteria 3 and 5 share one sweep.
ConditionalSweep conditional_sweep() {
  ConditionalSweep s;
  constexpr int kCount = 200;
  std::size_t pairs = 0;
  std::size_t chains = 0;
  for (int i = 0; i < kCount && s.oracle.pass && s.containment.pass; ++i) {
    Rng rng(2000 + i);
    const std::size_t n = 1 + i % 6;
    const BeliefFunction bel = remember(random_belief(rng, n, 1 + rng.uniform(0, 7)));
    const Frame& f = bel.frame();
    const CredalSet cs = extreme_points(bel);
    for (Mask b = 1; b < f.subset_count(); ++b) {
      if (!bel[b].is_positive()) continue;
      const Subset sb = f.subset(b);
      const ConditionalReport fh = fh_condition(bel, sb);
      const ConditionalReport ds = ds_condition(bel, sb);
      for (Mask a = 0; a < f.subset_count(); ++a) {
        ++pairs;
        const Interval iv = conditional_envelope(cs, f.subset(a), sb);
        const Rational fh_pl = fh.plausibility(a);
        s.oracle.require(iv.lower == fh.belief[a] && iv.upper == fh_pl, where(f, "oracle differs", a, b));
        ++chains;
        const Rational ds_pl = ds.plausibility(a);
        s.containment.require(fh.belief[a] <= ds.belief[a] && ds.belief[a] <= ds_pl && ds_pl <= fh_pl,
                              where(f, "chain violated", a, b));
      }
    }
  }
  if (s.oracle.pass) {
    s.oracle.detail = std::to_string(kCount) + " belief functions, n=1..6, " + std::to_string(pairs) +
                      " (A, B) pairs with Bel(B) > 0";
  }
  if (s.containment.pass) s.containment.detail = std::to_string(chains) + " chains, 0 violations";
  return s;
}

// Criterion 4.
Outcome certification() {
  Outcome o;
  constexpr int kCount = 500;
  std::size_t with_straddlers = 0;
  std::size_t strings = 0;
  for (int i = 0; i < kCount && o.pass; ++i) {
    Rng rng(3000 + i);
    const std::size_t n = 1 + i % 6;
    const BeliefFunction bel = remember(random_belief(rng, n, 1 + rng.uniform(0, 7)));
    const Frame& f = bel.frame();
    std::vector<Mask> candidates;
    for (Mask b = 1; b < f.subset_count(); ++b) {
      if (bel[b].is_positive()) candidates.push_back(b);
    }
    const Subset b = f.subset(candidates[rng.uniform(0, candidates.size() - 1)]);
    const std::string tag = "seed " + std::to_string(3000 + i) + ", B=" + b.to_string();
    const ConditionalReport fh = fh_condition(bel, b);
    const AxiomReport mobius = check_belief_axioms(fh.belief.values(), AxiomCheckMode::kMoebius);
    o.require(mobius.is_belief_function, tag + ": Moebius inverse of Bel(.|B) invalid: " + mobius.detail);
    const CertificationReport r = certify_conditional_belief(bel, b);
    o.require(r.certified, tag + ": " + r.detail);
    if (!r.decomposition.straddling.empty()) ++with_straddlers;
    strings += r.strings.size();
  }
  if (o.pass) {
    o.detail = std::to_string(kCount) + " pairs, n=1..6 (" + std::to_string(with_straddlers) +
               " with straddling focal sets, " + std::to_string(strings) + " strings)";
  }
  return o;
}

Document load_fixture(const char* name) { return parse_document(read_text(data_path(std::string("fixtures/") + name))); }

// Criterion 6.
Outcome sure_thing() {
  Outcome o;
  constexpr int kCount = 1000;
  int cases = 0;
  for (std::uint64_t seed = 4000; cases < kCount && o.pass; ++seed) {
    Rng rng(seed);
    const std::size_t n = 2 + seed % 5;
    const BeliefFunction bel = remember(random_belief(rng, n, 1 + rng.uniform(0, 7)));
    const Frame& f = bel.frame();
    const Subset q = f.subset(static_cast<Mask>(rng.uniform(1, f.full_mask() - 1)));
    const Subset p = f.subset(random_mask(rng, f, 0));
    if (!is_defined(bel, q.bits(), Rule::kLowerEnvelope) ||
        !is_defined(bel, q.complement().bits(), Rule::kLowerEnvelope)) {
      continue;
    }
    ++cases;
    o.require(sure_thing_check(bel, p, q, Rule::kLowerEnvelope).holds, "fh violates the principle at seed " +
                                                                           std::to_string(seed));
  }
  const Document doc = load_fixture("ds_sure_thing.json");
  const BeliefFunction bel = belief_from_mass(std::get<MassFunction>(doc.payload));
  const SureThingReport ds = sure_thing_check(bel, doc.events.at("p"), doc.events.at("q"), Rule::kDempster);
  o.require(!ds.holds, "stored ds fixture satisfies the principle");
  if (o.pass) {
    o.detail = std::to_string(cases) + " fh cases hold; fixture ds: Bel(p)=" + ds.prior.to_string() + " < min(" +
               ds.given_q.to_string() + ", " + ds.given_not_q.to_string() + ")";
  }
  return o;
}

// Criterion 7.
Outcome commutativity() {
  Outcome o;
  constexpr int kCount = 500;
  int cases = 0;
  for (std::uint64_t seed = 5000; cases < kCount && o.pass; ++seed) {
    Rng rng(seed);
    const std::size_t n = 2 + seed % 5;
    const BeliefFunction bel = remember(random_belief(rng, n, 1 + rng.uniform(0, 7)));
    const Frame& f = bel.frame();
    const Subset b = f.subset(random_mask(rng, f));
    const Subset c = f.subset(random_mask(rng, f));
    // Pl(B ∩ C) > 0 makes every step of both orders defined.
    if (!is_defined(bel, (b & c).bits(), Rule::kDempster)) continue;
    ++cases;
    const BeliefFunction joint = ds_condition(bel, b & c).belief;
    o.require(iterate(bel, {b, c}, Rule::kDempster).belief == joint, "B-then-C differs at seed " + std::to_string(seed));
    o.require(iterate(bel, {c, b}, Rule::kDempster).belief == joint, "C-then-B differs at seed " + std::to_string(seed));
  }
  const Document doc = load_fixture("fh_noncommute.json");
  const BeliefFunction bel = belief_from_mass(std::get<MassFunction>(doc.payload));
  const Mask a = doc.events.at("A").bits();
  const Subset b = doc.events.at("B");
  const Subset c = doc.events.at("C");
  const Rational bc = iterate(bel, {b, c}, Rule::kLowerEnvelope).belief[a];
  const Rational cb = iterate(bel, {c, b}, Rule::kLowerEnvelope).belief[a];
  const Rational joint = fh_condition(bel, b & c).belief[a];
  o.require(bc != cb && bc != joint && cb != joint, "stored fh fixture commutes");
  if (o.pass) {
    o.detail = std::to_string(cases) + " ds cases commute; fixture fh: " + bc.to_string() + ", " + cb.to_string() +
               ", " + joint.to_string();
  }
  return o;
}

// Criterion 8.
Outcome three_point_polytope() {
  Outcome o;
  const Frame f = Frame::letters(3);
  const CredalSet cs = polytope_vertices(three_point_constraints(f), f);
  const Interval a = envelope(cs, f.singleton(0));
  const Interval b = envelope(cs, f.singleton(1));
  o.require(a == Interval{Rational(1, 4), Rational(1, 2)}, "envelope of {a} != (1/4, 1/2)");
  o.require(b == Interval{Rational(1, 4), Rational(1, 2)}, "envelope of {b} != (1/4, 1/2)");
  const EnvelopeReport env = envelope_setfunction(cs);
  o.require(env.verdict.is_belief_function, "verdict: not a belief function");
  if (o.pass) o.detail = std::to_string(cs.size()) + " vertices; Bel=1/4, Pl=1/2 on {a},{b}; verdict: belief function";
  return o;
}

PartitionScenario random_partition(Rng& rng, std::size_t n) {
  const Frame f = Frame::letters(n);
  std::vector<Mask> cells(n, 0);
  for (std::size_t i = 0; i < n; ++i) cells[rng.uniform(0, n - 1)] |= Mask{1} << i;
  PartitionScenario ps;
  std::vector<std::int64_t> w;
  std::int64_t total = 0;
  for (Mask c : cells) {
    if (c == 0) continue;
    ps.cells.push_back(f.subset(c));
    w.push_back(1 + static_cast<std::int64_t>(rng.uniform(0, 5)));
    total += w.back();
  }
  for (std::int64_t x : w) ps.weights.emplace_back(x, total);
  return ps;
}

// Criterion 9.
Outcome redistribution() {
  Outcome o;
  constexpr int kCount = 100;
  std::size_t ds_checks = 0;
  std::size_t fh_checks = 0;
  for (int i = 0; i < kCount && o.pass; ++i) {
    Rng rng(6000 + i);
    const PartitionScenario ps = random_partition(rng, 2 + i % 5);
    const BeliefFunction bel = remember(partition_belief(ps));
    const CredalSet original = partition_credal(ps);
    const Frame& f = ps.frame();
    for (Mask b = 1; b < f.subset_count() && o.pass; ++b) {
      const Subset sb = f.subset(b);
      const CredalSet moved = redistribution_credal(ps, sb);
      const ConditionalReport ds = ds_condition(bel, sb);
      for (Mask a = 0; a < f.subset_count(); ++a, ++ds_checks) {
        o.require(conditional_envelope(moved, f.subset(a), sb) == Interval{ds.belief[a], ds.plausibility(a)},
                  "scenario " + std::to_string(i) + ": " + where(f, "P' differs from ds", a, b));
      }
      if (!bel[b].is_positive()) continue;
      const ConditionalReport fh = fh_condition(bel, sb);
      for (Mask a = 0; a < f.subset_count(); ++a, ++fh_checks) {
        o.require(conditional_envelope(original, f.subset(a), sb) == Interval{fh.belief[a], fh.plausibility(a)},
                  "scenario " + std::to_string(i) + ": " + where(f, "P differs from fh", a, b));
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(kCount) + " scenarios, n=2..6, every B: " + std::to_string(ds_checks) +
               " ds and " + std::to_string(fh_checks) + " fh comparisons";
  }
  return o;
}

// Criterion 10.
Outcome round_trips() {
  Outcome o;
  for (const MassFunction& m : g_generated) {
    o.require(mass_from_belief(belief_from_mass(m).values()) == m, "Moebius round trip fails");
  }

  const Document prisoners = three_prisoners_document();
  const BeliefFunction bel = belief_from_mass(std::get<MassFunction>(prisoners.payload));
  const Subset says_b = prisoners.events.at("says-b");
  const Frame three = Frame::letters(3);
  const std::vector<Document> docs{
      Document{prisoners.frame, prisoners.events, std::monostate{}},
      prisoners,
      Document{prisoners.frame, prisoners.events, bel},
      Document{prisoners.frame, prisoners.events, extreme_points(bel)},
      Document{prisoners.frame, prisoners.events, Scenario{"prisoners", three_prisoners_partition()}},
      Document{three, {}, Scenario{"three-point", ConstraintScenario{three_point_constraints(three)}}},
      Document{prisoners.frame, prisoners.events, Report(fh_condition(bel, says_b))},
      Document{prisoners.frame, prisoners.events, Report(ds_condition(bel, says_b))},
      Document{prisoners.frame, prisoners.events, Report(certify_conditional_belief(bel, says_b))},
  };
  for (const Document& doc : docs) {
    const std::string text = serialize(doc);
    const Document back = parse_document(text);
    o.require(back == doc && serialize(back) == text,
              std::string("serialize/parse differs for kind ") + std::string(kind_name(doc.kind())));
  }

  for (std::string_view name : demo_names()) {
    const DemoResult r = run_demo(name);
    o.require(r.all_matched, "demo " + std::string(name) + " reports a mismatch");
    o.require(r.text == slurp(data_path("golden/" + std::string(name) + ".txt")),
              "demo " + std::string(name) + " differs from its golden file");
  }
  if (o.pass) {
    o.detail = std::to_string(g_generated.size()) + " mass round trips, " + std::to_string(docs.size()) +
               " documents (6 kinds), " + std::to_string(demo_names().size()) + " golden demos";
  }
  return o;
}

template <typename Fn>
double timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome guarded(const std::function<Outcome()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return Outcome{false, std::string("exception: ") + e.what()};
  }
}

bool g_all_pass = true;

// A budget of 0 means the criterion states no runtime limit.
void report(int id, const char* title, Outcome o, double seconds, double budget) {
  if (budget > 0 && seconds >= budget) {
    o.pass = false;
    o.detail = "runtime budget exceeded; " + o.detail;
  }
  g_all_pass = g_all_pass && o.pass;
  char timing[64];
  if (budget > 0) {
    std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", seconds, budget);
  } else {
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << "  C" << id << (id < 10 ? "   " : "  ") << title << " [" << timing
            << "] " << o.detail << std::endl;
}

void single(int id, const char* title, double budget, Outcome (*fn)()) {
  Outcome o;
  const double seconds = timed([&] { o = guarded(fn); });
  report(id, title, o, seconds, budget);
}

}  // namespace

int main() {
  single(1, "three-prisoners reproduction", 1, three_prisoners);
  single(2, "unconditional envelope equals (Bel, Pl)", 60, envelope_equivalence);

  // Criterion 5 is evaluated on criterion 3's sweep.
  ConditionalSweep sweep;
  const double sweep_seconds = timed([&] {
    try {
      sweep = conditional_sweep();
    } catch (const std::exception& e) {
      sweep.oracle = Outcome{false, std::string("exception: ") + e.what()};
      sweep.containment = sweep.oracle;
    }
  });
  report(3, "conditional envelope equals closed form", sweep.oracle, sweep_seconds, 300);

  single(4, "conditional mass certifies Bel(.|B)", 300, certification);
  report(5, "containment chain on the criterion 3 sweep", sweep.containment, sweep_seconds, 0);
  single(6, "sure-thing principle (fh sweep, ds fixture)", 0, sure_thing);
  single(7, "commutativity (ds sweep, fh fixture)", 0, commutativity);
  single(8, "three-point constraint polytope", 0, three_point_polytope);
  single(9, "redistribution matches ds, original matches fh", 120, redistribution);
  single(10, "round trips and golden demo outputs", 0, round_trips);

  std::cout << (g_all_pass ? "acceptance: all criteria pass" : "acceptance: FAILED") << std::endl;
  return g_all_pass ? 0 : 1;
}
