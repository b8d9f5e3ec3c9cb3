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

#ifndef DSBELIEF_DOCUMENT_HPP_
#define DSBELIEF_DOCUMENT_HPP_

// JSON document format (format_version 1).
//
// Every document is an object with "format_version": 1, a "kind", the frame's
// element labels under "frame" and, optionally, named events under "events"
// (name -> array of labels). Subsets are always arrays of element labels and
// rationals are always strings "p/q" or "p". The kind selects one payload:
//
//   frame     (none)
//   mass      "mass":     [{"set": [...], "value": "p/q"}, ...]  focal sets only
//   belief    "belief":   [{"set": [...], "value": "p/q"}, ...]  every subset
//   credal    "vertices": [["p/q", ...], ...]                    one per vertex
//   scenario  "scenario": {"name": ..., "partition": [{"cell": [...], "weight": ...}]}
//                      or {"name": ..., "constraints": [{"coefficients": [...],
//                                                        "relation": "<=", "bound": ...}]}
//   report    "report":   {"type": "conditional", "rule", "event", "table", "events"}
//                      or {"type": "certification", "event", "decomposition",
//                          "m_double_prime", "m_prime", "certified", "mismatch", "detail"}
//
// Tables are written in canonical subset order (cardinality, then bitmask).
// The "events" summary inside a conditional report is derived data and is
// recomputed, not read, on parse.

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dsbelief/conditional_mass.hpp"
#include "dsbelief/conditioning.hpp"
#include "dsbelief/credal.hpp"
#include "dsbelief/expression.hpp"
#include "dsbelief/frame.hpp"
#include "dsbelief/set_function.hpp"

namespace dsbelief {

inline constexpr int kFormatVersion = 1;

enum class DocumentKind { kFrame, kMass, kBelief, kCredal, kScenario, kReport };

std::string_view kind_name(DocumentKind kind);

struct ConstraintScenario {
  std::vector<LinearConstraint> constraints;

  friend bool operator==(const ConstraintScenario&, const ConstraintScenario&) = default;
};

struct Scenario {
  std::string name;
  std::variant<PartitionScenario, ConstraintScenario> construction;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

using Report = std::variant<ConditionalReport, CertificationReport>;

struct Document {
  Frame frame;
  EventMap events;
  std::variant<std::monostate, MassFunction, BeliefFunction, CredalSet, Scenario, Report> payload;

  DocumentKind kind() const;

  friend bool operator==(const Document&, const Document&) = default;
};

// Pretty-printed JSON, newline-terminated. Output is byte-stable.
std::string serialize(const Document& doc);

// Throws ParseError for malformed JSON or schema violations. Payloads are
// validated by their constructors, so e.g. a belief table that is not a
// belief function raises NotABeliefFunction.
Document parse_document(std::string_view text);

// A mass or belief document read without enforcing the axioms; the table is
// returned as a set function of belief values (subset sums for mass
// documents). Used to report on candidate belief functions.
struct UncheckedBelief {
  Frame frame;
  EventMap events;
  DocumentKind kind;
  SetFunction values;
  // Raw masses for mass documents, the Moebius inverse for belief documents.
  SetFunction mass;
};

UncheckedBelief parse_unchecked_belief(std::string_view text);

// Reads a whole file, or standard input for "-".
std::string read_text(const std::string& path);

}  // namespace dsbelief

#endif  // DSBELIEF_DOCUMENT_HPP_
