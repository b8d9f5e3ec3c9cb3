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

// Seeded randomized search for the counterexample fixtures checked in under
// tests/fixtures:
//
//   noncommute  lower-envelope updates where observing B then C, C then B and
//               B∩C give three different beliefs in some A
//   sure-thing  a belief function where Dempster conditioning on q and on
//               not-q both raise the belief in p above its prior, with
//               Bel(q) > 0 and Bel(not q) > 0
//
// Prints the first hit as a mass document with the events used.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dsbelief/conditioning.hpp"
#include "dsbelief/document.hpp"
#include "dsbelief/errors.hpp"
#include "dsbelief/random.hpp"

namespace {

using namespace dsbelief;

bool search_noncommute(Rng& rng, std::size_t n, std::size_t focal, Document& out) {
  const BeliefFunction bel = random_belief(rng, n, focal);
  const Frame& frame = bel.frame();
  for (Mask b = 1; b < frame.subset_count(); ++b) {
    for (Mask c = 1; c < frame.subset_count(); ++c) {
      if (b == c || !bel[b & c].is_positive()) continue;
      const Subset sb = frame.subset(b);
      const Subset sc = frame.subset(c);
      const ConditionalReport bc = iterate(bel, {sb, sc}, Rule::kLowerEnvelope);
      const ConditionalReport cb = iterate(bel, {sc, sb}, Rule::kLowerEnvelope);
      const ConditionalReport joint = fh_condition(bel, sb & sc);
      for (Mask a = 0; a < frame.subset_count(); ++a) {
        if (bc.belief[a] != cb.belief[a] && bc.belief[a] != joint.belief[a] && cb.belief[a] != joint.belief[a]) {
          out = Document{frame, {{"A", frame.subset(a)}, {"B", sb}, {"C", sc}}, bel.mass()};
          return true;
        }
      }
    }
  }
  return false;
}

bool search_sure_thing(Rng& rng, std::size_t n, std::size_t focal, Document& out) {
  const BeliefFunction bel = random_belief(rng, n, focal);
  const Frame& frame = bel.frame();
  for (Mask q = 1; q < frame.full_mask(); ++q) {
    const Subset sq = frame.subset(q);
    // Require the lower-envelope rule to be defined too so the demo can contrast both.
    if (!is_defined(bel, q, Rule::kLowerEnvelope) || !is_defined(bel, sq.complement().bits(), Rule::kLowerEnvelope)) {
      continue;
    }
    for (Mask p = 1; p < frame.full_mask(); ++p) {
      const SureThingReport r = sure_thing_check(bel, frame.subset(p), sq, Rule::kDempster);
      if (!r.holds) {
        out = Document{frame, {{"p", frame.subset(p)}, {"q", sq}}, bel.mass()};
        return true;
      }
    }
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seeded search for counterexample fixtures"};
  std::string which;
  std::uint64_t seed = 1;
  std::size_t n = 3;
  std::size_t focal = 3;
  std::size_t attempts = 100000;
  app.add_option("fixture", which, "noncommute or sure-thing")->required()->check(CLI::IsMember({"noncommute", "sure-thing"}));
  app.add_option("--seed", seed, "search seed");
  app.add_option("--size", n, "frame size");
  app.add_option("--focal", focal, "focal sets per candidate");
  app.add_option("--attempts", attempts, "candidates to try");
  CLI11_PARSE(app, argc, argv);

  Rng rng(seed);
  Document found{Frame::letters(1), {}, std::monostate{}};
  for (std::size_t i = 0; i < attempts; ++i) {
    const bool hit = which == "noncommute" ? search_noncommute(rng, n, focal, found)
                                           : search_sure_thing(rng, n, focal, found);
    if (hit) {
      std::cerr << "found after " << (i + 1) << " candidates (seed " << seed << ")\n";
      std::cout << serialize(found);
      return 0;
    }
  }
  std::cerr << "no counterexample in " << attempts << " candidates\n";
  return 1;
}
