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

// dsbelief: command-line front end for conditioning, axiom checks, the
// vertex-enumeration oracle and the reproduction demos.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "dsbelief/conditional_mass.hpp"
#include "dsbelief/conditioning.hpp"
#include "dsbelief/credal.hpp"
#include "dsbelief/demo.hpp"
#include "dsbelief/document.hpp"
#include "dsbelief/errors.hpp"
#include "dsbelief/expression.hpp"
#include "dsbelief/random.hpp"

namespace {

using namespace dsbelief;

enum ExitCode : int {
  kOk = 0,
  kVerdictFailed = 1,
  kParseError = 2,
  kUndefined = 3,
  kTooLarge = 4,
  kInternal = 5,
};

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  1  negative verdict: not a belief function, oracle mismatch,\n"
    "     certification failure or demo mismatch\n"
    "  2  usage, parse or input validation error\n"
    "  3  conditioning undefined (Bel(B) = 0 for fh, Pl(B) = 0 for ds)\n"
    "  4  input exceeds an enumeration limit\n"
    "  5  internal error\n";

struct Loaded {
  Document doc;
  BeliefFunction belief;
};

// Accepts mass, belief and partition-scenario documents.
Loaded load_belief(const std::string& path) {
  Document doc = parse_document(read_text(path));
  if (const auto* m = std::get_if<MassFunction>(&doc.payload)) {
    BeliefFunction bel = belief_from_mass(*m);
    return Loaded{std::move(doc), std::move(bel)};
  }
  if (const auto* b = std::get_if<BeliefFunction>(&doc.payload)) {
    BeliefFunction bel = *b;
    return Loaded{std::move(doc), std::move(bel)};
  }
  if (const auto* s = std::get_if<Scenario>(&doc.payload)) {
    if (const auto* ps = std::get_if<PartitionScenario>(&s->construction)) {
      BeliefFunction bel = partition_belief(*ps);
      return Loaded{std::move(doc), std::move(bel)};
    }
  }
  throw ParseError("expected a mass, belief or partition-scenario document, got kind '" +
                   std::string(kind_name(doc.kind())) + "'");
}

int run_condition(const std::string& path, const std::string& event, const std::string& rule) {
  const Loaded in = load_belief(path);
  const Subset b = parse_event(event, in.doc.frame, in.doc.events);
  ConditionalReport report = condition(in.belief, b, parse_rule(rule));
  std::cout << serialize(Document{in.doc.frame, in.doc.events, Report(std::move(report))});
  return kOk;
}

int run_check(const std::string& path, bool direct) {
  const UncheckedBelief in = parse_unchecked_belief(read_text(path));
  const Frame& frame = in.frame;
  const AxiomReport moebius = check_belief_axioms(in.values, AxiomCheckMode::kMoebius);

  std::cout << std::left << std::setw(24) << "subset" << std::setw(16) << "value" << "moebius\n";
  for (Mask m : canonical_order(frame.size())) {
    std::cout << std::setw(24) << frame.subset(m).to_string() << std::setw(16) << in.values[m].to_string()
              << moebius.moebius[m].to_string() << "\n";
  }
  const auto print = [&](const char* mode, const AxiomReport& r) {
    std::cout << mode << ": " << (r.is_belief_function ? "belief function" : "NOT a belief function");
    if (!r.is_belief_function) {
      std::cout << " (violates " << r.violated << "; witness";
      for (Mask w : r.witness) std::cout << " " << frame.subset(w).to_string();
      std::cout << "; " << r.detail << ")";
    }
    std::cout << "\n";
  };
  print("moebius check", moebius);
  bool ok = moebius.is_belief_function;
  if (direct) {
    const AxiomReport literal = check_belief_axioms(in.values, AxiomCheckMode::kDirect);
    print("direct check", literal);
    ok = ok && literal.is_belief_function;
  }
  if (ok) {
    const MassFunction m(in.mass);
    std::cout << "mass supported on singletons: " << (m.is_bayesian() ? "yes" : "no") << "\n";
  }
  return ok ? kOk : kVerdictFailed;
}

int run_oracle(const std::string& path, const std::string& event, const std::string& set) {
  const Loaded in = load_belief(path);
  const Frame& frame = in.doc.frame;
  const Subset b = parse_event(event, frame, in.doc.events);
  std::vector<Mask> rows;
  if (set.empty()) {
    rows = canonical_order(frame.size());
  } else {
    rows.push_back(parse_event(set, frame, in.doc.events).bits());
  }
  const CredalSet cs = extreme_points(in.belief);
  const ConditionalReport fh = fh_condition(in.belief, b);
  std::cout << "event " << b.to_string() << ", " << cs.size() << " extreme points\n";
  std::cout << std::left << std::setw(24) << "subset" << std::setw(14) << "Bel(A|B)" << std::setw(14) << "min Pr(A|B)"
            << std::setw(14) << "Pl(A|B)" << std::setw(14) << "max Pr(A|B)" << "status\n";
  bool all = true;
  for (Mask a : rows) {
    const Interval iv = conditional_envelope(cs, frame.subset(a), b);
    const Rational bel = fh.belief[a];
    const Rational pl = fh.plausibility(a);
    const bool match = iv.lower == bel && iv.upper == pl;
    all = all && match;
    std::cout << std::setw(24) << frame.subset(a).to_string() << std::setw(14) << bel.to_string() << std::setw(14)
              << iv.lower.to_string() << std::setw(14) << pl.to_string() << std::setw(14) << iv.upper.to_string()
              << (match ? "EXACT-MATCH" : "MISMATCH") << "\n";
  }
  std::cout << (all ? "all rows match\n" : "MISMATCH found\n");
  return all ? kOk : kVerdictFailed;
}

int run_certify(const std::string& path, const std::string& event) {
  const Loaded in = load_belief(path);
  const Subset b = parse_event(event, in.doc.frame, in.doc.events);
  CertificationReport report = certify_conditional_belief(in.belief, b);
  const bool ok = report.certified;
  std::cout << serialize(Document{in.doc.frame, in.doc.events, Report(std::move(report))});
  return ok ? kOk : kVerdictFailed;
}

int run_envelope(const std::string& path) {
  const Document doc = parse_document(read_text(path));
  std::optional<CredalSet> cs;
  if (const auto* c = std::get_if<CredalSet>(&doc.payload)) {
    cs = *c;
  } else if (const auto* s = std::get_if<Scenario>(&doc.payload)) {
    if (const auto* ps = std::get_if<PartitionScenario>(&s->construction)) {
      cs = partition_credal(*ps);
    } else {
      cs = polytope_vertices(std::get<ConstraintScenario>(s->construction).constraints, doc.frame);
    }
  } else {
    throw ParseError("expected a credal or scenario document");
  }
  const EnvelopeReport env = envelope_setfunction(*cs);
  const Frame& frame = doc.frame;
  std::cout << cs->size() << " vertices\n";
  std::cout << std::left << std::setw(24) << "subset" << std::setw(14) << "lower" << std::setw(14) << "upper"
            << "moebius\n";
  for (Mask m : canonical_order(frame.size())) {
    const Interval iv = envelope(*cs, frame.subset(m));
    std::cout << std::setw(24) << frame.subset(m).to_string() << std::setw(14) << iv.lower.to_string()
              << std::setw(14) << iv.upper.to_string() << env.verdict.moebius[m].to_string() << "\n";
  }
  std::cout << "lower envelope: " << (env.verdict.is_belief_function ? "belief function" : "NOT a belief function");
  if (!env.verdict.is_belief_function) std::cout << " (" << env.verdict.violated << "; " << env.verdict.detail << ")";
  std::cout << "\n";
  return env.verdict.is_belief_function ? kOk : kVerdictFailed;
}

int run_convert(const std::string& target, const std::string& path) {
  const Loaded in = load_belief(path);
  if (target == "mass") {
    std::cout << serialize(Document{in.doc.frame, in.doc.events, in.belief.mass()});
  } else {
    std::cout << serialize(Document{in.doc.frame, in.doc.events, in.belief});
  }
  return kOk;
}

int run_demo_command(const std::string& name) {
  const DemoResult r = run_demo(name);
  std::cout << r.text;
  return r.all_matched ? kOk : kVerdictFailed;
}

int run_random(std::uint64_t seed, std::size_t n, std::size_t focal) {
  const MassFunction m = random_mass(seed, n, focal);
  std::cout << serialize(Document{m.frame(), {}, m});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belief functions over finite frames: lower-envelope and Dempster conditioning"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);

  std::string file;
  std::string event;
  std::string rule = "fh";
  std::string set;
  std::string target;
  std::string demo_name;
  bool direct = false;
  std::uint64_t seed = 1;
  std::size_t size = 4;
  std::size_t focal = 3;

  auto* cond = app.add_subcommand("condition", "Condition a mass/belief document on an event");
  cond->add_option("--rule", rule, "fh (lower envelope) or ds (Dempster)")->check(CLI::IsMember({"fh", "ds"}));
  cond->add_option("--event", event, "event expression, e.g. 'says-b' or 'a,b & ~c'")->required();
  cond->add_option("file", file, "input document, - for stdin")->required();

  auto* check = app.add_subcommand("check", "Check the belief-function axioms of a mass/belief document");
  check->add_flag("--direct", direct, "also check B3 literally over all collections (n <= 3)");
  check->add_option("file", file, "input document, - for stdin")->required();

  auto* oracle = app.add_subcommand("oracle", "Compare closed-form conditioning with vertex enumeration");
  oracle->add_option("--event", event, "conditioning event expression")->required();
  oracle->add_option("--set", set, "only report this subset");
  oracle->add_option("file", file, "input document, - for stdin")->required();

  auto* certify = app.add_subcommand("certify", "Build the conditional mass function m' and certify it");
  certify->add_option("--event", event, "conditioning event expression")->required();
  certify->add_option("file", file, "input document, - for stdin")->required();

  auto* env = app.add_subcommand("envelope", "Lower/upper envelopes of a credal or scenario document");
  env->add_option("file", file, "input document, - for stdin")->required();

  auto* demo = app.add_subcommand("demo", "Run a reproduction demo");
  demo->add_option("name", demo_name, "three-prisoners, noncommute, sure-thing, beehive or lost-info")->required();

  auto* convert = app.add_subcommand("convert", "Rewrite a document as a mass or belief document");
  convert->add_option("target", target, "mass or belief")->required()->check(CLI::IsMember({"mass", "belief"}));
  convert->add_option("file", file, "input document, - for stdin")->required();

  auto* random = app.add_subcommand("random", "Emit a seeded random mass document");
  random->add_option("--seed", seed, "generator seed");
  random->add_option("--size", size, "frame size (1-12)");
  random->add_option("--focal", focal, "number of focal sets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  try {
    if (*cond) return run_condition(file, event, rule);
    if (*check) return run_check(file, direct);
    if (*oracle) return run_oracle(file, event, set);
    if (*certify) return run_certify(file, event);
    if (*env) return run_envelope(file);
    if (*demo) return run_demo_command(demo_name);
    if (*convert) return run_convert(target, file);
    if (*random) return run_random(seed, size, focal);
  } catch (const ConditioningUndefined& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUndefined;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kTooLarge;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kParseError;
}
