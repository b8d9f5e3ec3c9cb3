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

#ifndef DSBELIEF_DEMO_HPP_
#define DSBELIEF_DEMO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "dsbelief/document.hpp"

namespace dsbelief {

struct DemoResult {
  std::string text;
  // False if any computed value differs from the value the demo expects.
  bool all_matched = true;
};

// "three-prisoners", "noncommute", "sure-thing", "beehive", "lost-info".
const std::vector<std::string_view>& demo_names();

// Deterministic narrative report. Throws ParseError for an unknown name.
DemoResult run_demo(std::string_view name);

// Named scenarios used by the demos and tests.
Document three_prisoners_document();
PartitionScenario three_prisoners_partition();
std::vector<LinearConstraint> three_point_constraints(const Frame& frame);

// Counterexample fixtures found by tools/fixture_search, as mass documents.
// Identical to the files under tests/fixtures.
std::string_view noncommute_fixture_json();
std::string_view sure_thing_fixture_json();

}  // namespace dsbelief

#endif  // DSBELIEF_DEMO_HPP_
