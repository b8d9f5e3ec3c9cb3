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

#include <gtest/gtest.h>

#include <set>

#include "dsbelief/conditional_mass.hpp"
#include "dsbelief/conditioning.hpp"
#include "dsbelief/demo.hpp"
#include "dsbelief/document.hpp"
#include "dsbelief/errors.hpp"
#include "dsbelief/expression.hpp"
#include "dsbelief/random.hpp"
#include "test_support.hpp"

namespace dsbelief {
namespace {

void expect_round_trip(const Document& doc) {
  const std::string text = serialize(doc);
  const Document back = parse_document(text);
  EXPECT_EQ(back, doc);
  EXPECT_EQ(serialize(back), text);
}

std::vector<Document> sample_documents() {
  const Document prisoners = three_prisoners_document();
  const BeliefFunction bel = belief_from_mass(std::get<MassFunction>(prisoners.payload));
  const Frame& f = prisoners.frame;
  const Frame three = Frame::letters(3);
  std::vector<Document> docs;
  docs.push_back(Document{f, prisoners.events, std::monostate{}});
  docs.push_back(prisoners);
  docs.push_back(Document{f, {}, bel});
  docs.push_back(Document{f, prisoners.events, extreme_points(bel)});
  docs.push_back(Document{f, prisoners.events, Scenario{"prisoners", three_prisoners_partition()}});
  docs.push_back(Document{three, {}, Scenario{"three-point", ConstraintScenario{three_point_constraints(three)}}});
  docs.push_back(Document{f, prisoners.events, Report(fh_condition(bel, prisoners.events.at("says-b")))});
  docs.push_back(Document{f, prisoners.events, Report(ds_condition(bel, prisoners.events.at("says-b")))});
  docs.push_back(Document{f, prisoners.events, Report(certify_conditional_belief(bel, prisoners.events.at("says-b")))});
  return docs;
}

TEST(Document, RoundTripsEveryKind) {
  std::set<DocumentKind> kinds;
  for (const Document& doc : sample_documents()) {
    SCOPED_TRACE(kind_name(doc.kind()));
    kinds.insert(doc.kind());
    expect_round_trip(doc);
  }
  EXPECT_EQ(kinds.size(), 6U);
}

TEST(Document, RoundTripsRandomMassesAndReports) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    const MassFunction m = random_mass(rng, 1 + seed % 6, 1 + rng.uniform(0, 5));
    expect_round_trip(Document{m.frame(), {}, m});
    const BeliefFunction bel = belief_from_mass(m);
    expect_round_trip(Document{m.frame(), {}, bel});
    const Subset b = m.frame().subset(static_cast<Mask>(rng.uniform(1, m.frame().full_mask())));
    if (bel.at(b).is_positive()) {
      expect_round_trip(Document{m.frame(), {}, Report(certify_conditional_belief(bel, b))});
    }
  }
}

TEST(Document, RationalsAreStrings) {
  const std::string text = serialize(three_prisoners_document());
  EXPECT_NE(text.find("\"1/3\""), std::string::npos);
  EXPECT_EQ(text.find("0.33"), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
}

TEST(Document, FixtureFileMatchesParsedDocument) {
  const Document doc = parse_document(read_text(testing::data_path("fixtures/three_prisoners.json")));
  EXPECT_EQ(doc, three_prisoners_document());
}

TEST(Document, RejectsMalformedInput) {
  const auto bad = [](const std::string& text) { EXPECT_THROW(parse_document(text), Error) << text; };
  bad("");
  bad("[]");
  bad("{\"format_version\": 2, \"kind\": \"frame\", \"frame\": [\"a\"]}");
  bad("{\"format_version\": 1, \"kind\": \"widget\", \"frame\": [\"a\"]}");
  bad("{\"format_version\": 1, \"kind\": \"frame\", \"frame\": []}");
  bad("{\"format_version\": 1, \"kind\": \"frame\", \"frame\": [\"a\", \"a\"]}");
  bad("{\"format_version\": 1, \"kind\": \"mass\", \"frame\": [\"a\"], \"mass\": [{\"set\": [\"a\"], \"value\": 1}]}");
  bad("{\"format_version\": 1, \"kind\": \"mass\", \"frame\": [\"a\"], \"mass\": [{\"set\": [\"a\"], \"value\": 0.5}]}");
  bad("{\"format_version\": 1, \"kind\": \"mass\", \"frame\": [\"a\"], \"mass\": [{\"set\": [\"b\"], \"value\": \"1\"}]}");
  bad("{\"format_version\": 1, \"kind\": \"mass\", \"frame\": [\"a\", \"b\"], \"mass\": [{\"set\": [\"a\"], "
      "\"value\": \"1/2\"}]}");
  bad("{\"format_version\": 1, \"kind\": \"belief\", \"frame\": [\"a\"], \"belief\": [{\"set\": [], \"value\": "
      "\"0\"}]}");
}

TEST(Document, InvalidMassKeepsAxiomName) {
  try {
    parse_document(
        "{\"format_version\": 1, \"kind\": \"mass\", \"frame\": [\"a\", \"b\"], \"mass\": [{\"set\": [\"a\"], "
        "\"value\": \"1/2\"}]}");
    FAIL() << "accepted a mass table summing to 1/2";
  } catch (const InvalidMass& e) {
    EXPECT_EQ(e.axiom(), "M2");
  }
}

TEST(Document, UncheckedBeliefAcceptsNonBeliefTables) {
  const UncheckedBelief u = parse_unchecked_belief(read_text(testing::data_path("fixtures/three_vertex_envelope.json")));
  EXPECT_EQ(u.kind, DocumentKind::kBelief);
  EXPECT_EQ(u.mass[7], Rational(-1, 2));
  EXPECT_THROW(parse_document(read_text(testing::data_path("fixtures/three_vertex_envelope.json"))),
               NotABeliefFunction);
}

TEST(Document, ReadTextMissingFile) {
  EXPECT_THROW(read_text(testing::data_path("fixtures/does-not-exist.json")), ParseError);
}

TEST(Expression, Operators) {
  const Frame f = Frame::letters(4);
  const EventMap ev{{"B", f.subset(0b0110)}, {"odd", f.subset(0b0101)}};
  const auto mask = [&](const char* e) { return parse_event(e, f, ev).bits(); };
  EXPECT_EQ(mask("a"), 0b0001U);
  EXPECT_EQ(mask("a,b"), 0b0011U);
  EXPECT_EQ(mask("a | d"), 0b1001U);
  EXPECT_EQ(mask("B & odd"), 0b0100U);
  EXPECT_EQ(mask("~B"), 0b1001U);
  EXPECT_EQ(mask("~(a,b) & B"), 0b0100U);
  EXPECT_EQ(mask("a | b & c"), 0b0001U);
  EXPECT_EQ(mask("{}"), 0U);
  EXPECT_EQ(mask("{a, d}"), 0b1001U);
  EXPECT_EQ(mask("*"), 0b1111U);
  EXPECT_EQ(mask("~*"), 0U);
  EXPECT_EQ(mask("'odd'"), 0b0101U);
  EXPECT_EQ(mask("~~B"), 0b0110U);
}

TEST(Expression, HyphenatedNames) {
  const Document doc = three_prisoners_document();
  EXPECT_EQ(parse_event("lives-a & says-b", doc.frame, doc.events).labels(), (std::vector<std::string>{"ab"}));
  EXPECT_EQ(parse_event("ab,cb", doc.frame, doc.events), doc.events.at("says-b"));
}

TEST(Expression, Errors) {
  const Frame f = Frame::letters(3);
  const EventMap clash{{"a", f.singleton(1)}};
  for (const char* bad : {"", "x", "a,", "(a", "a)", "a b", "~", "'a", "a &", "{a"}) {
    EXPECT_THROW(parse_event(bad, f), ParseError) << bad;
  }
  EXPECT_THROW(parse_event("a", f, clash), ParseError);
  try {
    parse_event("a | zz", f);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("offset 4"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace dsbelief
