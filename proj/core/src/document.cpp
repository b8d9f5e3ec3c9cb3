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

#include "dsbelief/document.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "json.hpp"

#include "dsbelief/errors.hpp"

namespace dsbelief {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& what) { throw ParseError("document: " + what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) schema_error(std::string("expected an object holding '") + name + "'");
  const auto it = j.find(name);
  if (it == j.end()) schema_error(std::string("missing field '") + name + "'");
  return *it;
}

const std::string& string_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_string()) schema_error(std::string("field '") + name + "' must be a string");
  return v.get_ref<const std::string&>();
}

const Json& array_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_array()) schema_error(std::string("field '") + name + "' must be an array");
  return v;
}

Json rational_json(const Rational& r) { return r.to_string(); }

Rational rational_from(const Json& j) {
  if (!j.is_string()) schema_error("rationals must be written as strings \"p/q\"");
  return Rational::parse(j.get_ref<const std::string&>());
}

Json set_json(const Frame& frame, Mask m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if ((m >> i) & 1U) out.push_back(frame.label(i));
  }
  return out;
}

Mask set_from(const Json& j, const Frame& frame) {
  if (!j.is_array()) schema_error("subsets must be arrays of element labels");
  Mask m = 0;
  for (const auto& e : j) {
    if (!e.is_string()) schema_error("subset members must be strings");
    const auto i = frame.index_of(e.get_ref<const std::string&>());
    if (!i) schema_error("unknown element '" + e.get<std::string>() + "'");
    const Mask bit = Mask{1} << *i;
    if (m & bit) schema_error("element '" + e.get<std::string>() + "' listed twice in a subset");
    m |= bit;
  }
  return m;
}

// [{"set": [...], "value": "..."}] in canonical order; zero entries skipped
// when `skip_zero`.
Json table_json(const SetFunction& f, bool skip_zero) {
  Json out = Json::array();
  for (Mask m : canonical_order(f.frame().size())) {
    if (skip_zero && f[m].is_zero()) continue;
    out.push_back(Json{{"set", set_json(f.frame(), m)}, {"value", rational_json(f[m])}});
  }
  return out;
}

// Reads a table; `total` requires every subset exactly once.
std::vector<Rational> table_from(const Json& j, const Frame& frame, bool total) {
  if (!j.is_array()) schema_error("tables must be arrays");
  std::vector<Rational> values(frame.subset_count());
  std::vector<bool> seen(frame.subset_count(), false);
  for (const auto& row : j) {
    const Mask m = set_from(field(row, "set"), frame);
    if (seen[m]) schema_error("subset " + frame.subset(m).to_string() + " listed twice");
    seen[m] = true;
    values[m] = rational_from(field(row, "value"));
  }
  if (total) {
    for (Mask m = 0; m < frame.subset_count(); ++m) {
      if (!seen[m]) schema_error("belief table is missing subset " + frame.subset(m).to_string());
    }
  }
  return values;
}

Json distribution_json(const Distribution& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(rational_json(x));
  return out;
}

Distribution distribution_from(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) schema_error("vectors must have one entry per frame element");
  Distribution p;
  for (const auto& x : j) p.push_back(rational_from(x));
  return p;
}

Json scenario_json(const Frame& frame, const Scenario& s) {
  Json out{{"name", s.name}};
  if (const auto* ps = std::get_if<PartitionScenario>(&s.construction)) {
    Json cells = Json::array();
    for (std::size_t i = 0; i < ps->cells.size(); ++i) {
      cells.push_back(Json{{"cell", set_json(frame, ps->cells[i].bits())}, {"weight", rational_json(ps->weights[i])}});
    }
    out["partition"] = std::move(cells);
  } else {
    Json constraints = Json::array();
    for (const auto& c : std::get<ConstraintScenario>(s.construction).constraints) {
      constraints.push_back(Json{{"coefficients", distribution_json(c.coefficients)},
                                 {"relation", std::string(relation_symbol(c.relation))},
                                 {"bound", rational_json(c.bound)}});
    }
    out["constraints"] = std::move(constraints);
  }
  return out;
}

Scenario scenario_from(const Json& j, const Frame& frame) {
  Scenario s{string_field(j, "name"), PartitionScenario{}};
  const bool has_partition = j.contains("partition");
  const bool has_constraints = j.contains("constraints");
  if (has_partition == has_constraints) schema_error("a scenario needs exactly one of 'partition' or 'constraints'");
  if (has_partition) {
    PartitionScenario ps;
    for (const auto& cell : array_field(j, "partition")) {
      ps.cells.push_back(frame.subset(set_from(field(cell, "cell"), frame)));
      ps.weights.push_back(rational_from(field(cell, "weight")));
    }
    try {
      ps.validate();
    } catch (const InvalidScenario& e) {
      schema_error(e.what());
    }
    s.construction = std::move(ps);
  } else {
    ConstraintScenario cs;
    for (const auto& c : array_field(j, "constraints")) {
      LinearConstraint lc;
      lc.coefficients = distribution_from(field(c, "coefficients"), frame.size());
      lc.relation = parse_relation(string_field(c, "relation"));
      lc.bound = rational_from(field(c, "bound"));
      cs.constraints.push_back(std::move(lc));
    }
    s.construction = std::move(cs);
  }
  return s;
}

Json conditional_report_json(const Frame& frame, const EventMap& events, const ConditionalReport& r) {
  Json table = Json::array();
  for (Mask m : canonical_order(frame.size())) {
    table.push_back(Json{{"set", set_json(frame, m)},
                         {"belief", rational_json(r.belief[m])},
                         {"plausibility", rational_json(r.plausibility(m))}});
  }
  Json named = Json::array();
  for (const auto& [name, subset] : events) {
    named.push_back(Json{{"name", name},
                         {"belief", rational_json(r.belief[subset.bits()])},
                         {"plausibility", rational_json(r.plausibility(subset.bits()))}});
  }
  return Json{{"type", "conditional"},
              {"rule", std::string(rule_tag(r.rule))},
              {"event", set_json(frame, r.event.bits())},
              {"table", std::move(table)},
              {"events", std::move(named)}};
}

ConditionalReport conditional_report_from(const Json& j, const Frame& frame) {
  const Rule rule = parse_rule(string_field(j, "rule"));
  const Subset event = frame.subset(set_from(field(j, "event"), frame));
  const Json& table = array_field(j, "table");
  std::vector<Rational> belief(frame.subset_count());
  std::vector<Rational> plausibility(frame.subset_count());
  std::vector<bool> seen(frame.subset_count(), false);
  for (const auto& row : table) {
    const Mask m = set_from(field(row, "set"), frame);
    if (seen[m]) schema_error("subset listed twice in report table");
    seen[m] = true;
    belief[m] = rational_from(field(row, "belief"));
    plausibility[m] = rational_from(field(row, "plausibility"));
  }
  for (Mask m = 0; m < frame.subset_count(); ++m) {
    if (!seen[m]) schema_error("report table is missing subset " + frame.subset(m).to_string());
  }
  ConditionalReport r{rule, event, BeliefFunction(SetFunction(frame, std::move(belief)))};
  for (Mask m = 0; m < frame.subset_count(); ++m) {
    if (r.plausibility(m) != plausibility[m]) {
      schema_error("plausibility column disagrees with the belief column at " + frame.subset(m).to_string());
    }
  }
  return r;
}

Json certification_json(const Frame& frame, const CertificationReport& r) {
  const FocalDecomposition& fd = r.decomposition;
  Json inside = Json::array();
  for (std::size_t i = 0; i < fd.inside.size(); ++i) {
    inside.push_back(Json{{"name", "B" + std::to_string(i + 1)},
                          {"set", set_json(frame, fd.inside[i])},
                          {"mass", rational_json(fd.inside_raw[i])},
                          {"weight", rational_json(fd.inside_weights[i])}});
  }
  Json straddling = Json::array();
  for (std::size_t j = 0; j < fd.straddling.size(); ++j) {
    straddling.push_back(Json{{"name", "A" + std::to_string(j + 1)},
                              {"focal_set", set_json(frame, fd.straddling_raw[j])},
                              {"set", set_json(frame, fd.straddling[j])},
                              {"mass", rational_json(fd.straddling_raw_weights[j])},
                              {"weight", rational_json(fd.straddling_weights[j])}});
  }
  Json strings = Json::array();
  for (const auto& s : r.strings) {
    strings.push_back(Json{{"string", s.string.name()},
                           {"set", set_json(frame, s.represented)},
                           {"value", rational_json(s.value)}});
  }
  Json m_prime = nullptr;
  if (r.conditional_mass) {
    m_prime = Json::array();
    const MassFunction& mp = *r.conditional_mass;
    for (Mask m : canonical_order(mp.frame().size())) {
      if (mp[m].is_zero()) continue;
      m_prime.push_back(Json{{"set", set_json(frame, expand_mask(m, fd.event.bits()))},
                             {"value", rational_json(mp[m])}});
    }
  }
  return Json{{"type", "certification"},
              {"event", set_json(frame, fd.event.bits())},
              {"decomposition",
               Json{{"inside", std::move(inside)},
                    {"straddling", std::move(straddling)},
                    {"normalizer", rational_json(fd.normalizer)}}},
              {"m_double_prime", std::move(strings)},
              {"m_prime", std::move(m_prime)},
              {"certified", r.certified},
              {"mismatch", r.mismatch ? set_json(frame, *r.mismatch) : Json(nullptr)},
              {"detail", r.detail}};
}

CertificationReport certification_from(const Json& j, const Frame& frame) {
  CertificationReport r{FocalDecomposition{frame.subset(set_from(field(j, "event"), frame)), {}, {}, {}, {}, {},
                                           Rational(0), {}, {}},
                        {}, std::nullopt,
                        false, std::nullopt, ""};
  FocalDecomposition& fd = r.decomposition;
  const Json& dec = field(j, "decomposition");
  for (const auto& row : array_field(dec, "inside")) {
    fd.inside.push_back(set_from(field(row, "set"), frame));
    fd.inside_raw.push_back(rational_from(field(row, "mass")));
    fd.inside_weights.push_back(rational_from(field(row, "weight")));
  }
  for (const auto& row : array_field(dec, "straddling")) {
    fd.straddling_raw.push_back(set_from(field(row, "focal_set"), frame));
    fd.straddling.push_back(set_from(field(row, "set"), frame));
    fd.straddling_raw_weights.push_back(rational_from(field(row, "mass")));
    fd.straddling_weights.push_back(rational_from(field(row, "weight")));
  }
  fd.normalizer = rational_from(field(dec, "normalizer"));
  for (const auto& row : array_field(j, "m_double_prime")) {
    FocalString s = FocalString::parse(string_field(row, "string"));
    if (s.head >= fd.inside.size() || (!s.tail.empty() && s.tail.back() >= fd.straddling.size())) {
      schema_error("focal string '" + s.name() + "' refers to a set outside the decomposition");
    }
    r.strings.push_back(StringMass{std::move(s), set_from(field(row, "set"), frame), rational_from(field(row, "value"))});
  }
  const Json& mp = field(j, "m_prime");
  if (!mp.is_null()) {
    const Frame sub = frame.restrict(fd.event);
    std::vector<std::pair<Subset, Rational>> weights;
    for (const auto& row : mp) {
      const Mask m = set_from(field(row, "set"), frame);
      if (!is_subset_mask(m, fd.event.bits())) schema_error("m' entry lies outside the conditioning event");
      weights.emplace_back(sub.subset(compress_mask(m, fd.event.bits())), rational_from(field(row, "value")));
    }
    r.conditional_mass = MassFunction::from_focal(sub, weights);
  }
  const Json& certified = field(j, "certified");
  if (!certified.is_boolean()) schema_error("'certified' must be a boolean");
  r.certified = certified.get<bool>();
  const Json& mismatch = field(j, "mismatch");
  if (!mismatch.is_null()) r.mismatch = set_from(mismatch, frame);
  r.detail = string_field(j, "detail");
  return r;
}

struct Header {
  Frame frame;
  EventMap events;
  DocumentKind kind;
};

DocumentKind kind_from(const std::string& name) {
  for (DocumentKind k : {DocumentKind::kFrame, DocumentKind::kMass, DocumentKind::kBelief, DocumentKind::kCredal,
                         DocumentKind::kScenario, DocumentKind::kReport}) {
    if (kind_name(k) == name) return k;
  }
  schema_error("unknown document kind '" + name + "'");
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Header header_from(const Json& j) {
  if (!j.is_object()) schema_error("top level must be an object");
  const Json& version = field(j, "format_version");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
    schema_error("unsupported format_version (expected " + std::to_string(kFormatVersion) + ")");
  }
  const DocumentKind kind = kind_from(string_field(j, "kind"));
  std::vector<std::string> labels;
  for (const auto& l : array_field(j, "frame")) {
    if (!l.is_string()) schema_error("frame labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  Frame frame(std::move(labels));
  EventMap events;
  if (const auto it = j.find("events"); it != j.end()) {
    if (!it->is_object()) schema_error("'events' must map names to subsets");
    for (const auto& [name, set] : it->items()) events.emplace(name, frame.subset(set_from(set, frame)));
  }
  return Header{std::move(frame), std::move(events), kind};
}

}  // namespace

std::string_view kind_name(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::kFrame:
      return "frame";
    case DocumentKind::kMass:
      return "mass";
    case DocumentKind::kBelief:
      return "belief";
    case DocumentKind::kCredal:
      return "credal";
    case DocumentKind::kScenario:
      return "scenario";
    case DocumentKind::kReport:
      return "report";
  }
  return "frame";
}

DocumentKind Document::kind() const {
  switch (payload.index()) {
    case 1:
      return DocumentKind::kMass;
    case 2:
      return DocumentKind::kBelief;
    case 3:
      return DocumentKind::kCredal;
    case 4:
      return DocumentKind::kScenario;
    case 5:
      return DocumentKind::kReport;
    default:
      return DocumentKind::kFrame;
  }
}

std::string serialize(const Document& doc) {
  const Frame& frame = doc.frame;
  Json j{{"format_version", kFormatVersion}, {"kind", std::string(kind_name(doc.kind()))}};
  Json labels = Json::array();
  for (const auto& l : frame.labels()) labels.push_back(l);
  j["frame"] = std::move(labels);
  if (!doc.events.empty()) {
    Json events = Json::object();
    for (const auto& [name, subset] : doc.events) {
      require_same_frame(frame, subset.frame(), "serialize");
      events[name] = set_json(frame, subset.bits());
    }
    j["events"] = std::move(events);
  }
  std::visit(
      [&](const auto& payload) {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, MassFunction>) {
          require_same_frame(frame, payload.frame(), "serialize");
          j["mass"] = table_json(payload.values(), true);
        } else if constexpr (std::is_same_v<T, BeliefFunction>) {
          require_same_frame(frame, payload.frame(), "serialize");
          j["belief"] = table_json(payload.values(), false);
        } else if constexpr (std::is_same_v<T, CredalSet>) {
          require_same_frame(frame, payload.frame(), "serialize");
          Json vertices = Json::array();
          for (const auto& v : payload.vertices()) vertices.push_back(distribution_json(v));
          j["vertices"] = std::move(vertices);
        } else if constexpr (std::is_same_v<T, Scenario>) {
          j["scenario"] = scenario_json(frame, payload);
        } else if constexpr (std::is_same_v<T, Report>) {
          if (const auto* c = std::get_if<ConditionalReport>(&payload)) {
            j["report"] = conditional_report_json(frame, doc.events, *c);
          } else {
            j["report"] = certification_json(frame, std::get<CertificationReport>(payload));
          }
        }
      },
      doc.payload);
  return j.dump(2) + "\n";
}

Document parse_document(std::string_view text) {
  const Json j = parse_json(text);
  Header h = header_from(j);
  Document doc{h.frame, std::move(h.events), std::monostate{}};
  const Frame& frame = doc.frame;
  switch (h.kind) {
    case DocumentKind::kFrame:
      break;
    case DocumentKind::kMass: {
      std::vector<Rational> values = table_from(array_field(j, "mass"), frame, false);
      doc.payload = MassFunction(SetFunction(frame, std::move(values)));
      break;
    }
    case DocumentKind::kBelief: {
      std::vector<Rational> values = table_from(array_field(j, "belief"), frame, true);
      doc.payload = BeliefFunction(SetFunction(frame, std::move(values)));
      break;
    }
    case DocumentKind::kCredal: {
      std::vector<Distribution> vertices;
      for (const auto& v : array_field(j, "vertices")) vertices.push_back(distribution_from(v, frame.size()));
      try {
        doc.payload = CredalSet(frame, std::move(vertices));
      } catch (const std::invalid_argument& e) {
        schema_error(e.what());
      }
      break;
    }
    case DocumentKind::kScenario:
      doc.payload = scenario_from(field(j, "scenario"), frame);
      break;
    case DocumentKind::kReport: {
      const Json& report = field(j, "report");
      const std::string& type = string_field(report, "type");
      if (type == "conditional") {
        doc.payload = Report(conditional_report_from(report, frame));
      } else if (type == "certification") {
        doc.payload = Report(certification_from(report, frame));
      } else {
        schema_error("unknown report type '" + type + "'");
      }
      break;
    }
  }
  return doc;
}

UncheckedBelief parse_unchecked_belief(std::string_view text) {
  const Json j = parse_json(text);
  Header h = header_from(j);
  if (h.kind == DocumentKind::kMass) {
    std::vector<Rational> mass = table_from(array_field(j, "mass"), h.frame, false);
    SetFunction values(h.frame, zeta_transform(mass));
    return UncheckedBelief{h.frame, std::move(h.events), h.kind, std::move(values),
                           SetFunction(h.frame, std::move(mass))};
  }
  if (h.kind == DocumentKind::kBelief) {
    std::vector<Rational> values = table_from(array_field(j, "belief"), h.frame, true);
    SetFunction mass(h.frame, moebius_transform(values));
    return UncheckedBelief{h.frame, std::move(h.events), h.kind, SetFunction(h.frame, std::move(values)),
                           std::move(mass)};
  }
  schema_error("expected a mass or belief document, got kind '" + std::string(kind_name(h.kind)) + "'");
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dsbelief
