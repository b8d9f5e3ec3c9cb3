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

#ifndef DSBELIEF_EXPRESSION_HPP_
#define DSBELIEF_EXPRESSION_HPP_

#include <map>
#include <string>
#include <string_view>

#include "dsbelief/frame.hpp"

namespace dsbelief {

// Named events attached to a document, e.g. "says-b" -> {ab, cb}.
using EventMap = std::map<std::string, Subset>;

// Parses a set expression over the frame:
//
//   expr    := inter (('|' | ',') inter)*     union
//   inter   := unary ('&' unary)*             intersection
//   unary   := '~' unary | primary            complement
//   primary := '(' expr ')' | '{' [expr] '}' | '*' | name
//
// A name is a named event or an element label, written bare (letters,
// digits and _ - . : / # @) or quoted with ' or ". '*' is the whole frame and
// '{}' the empty set. Throws ParseError on syntax errors, unknown names, or a
// name that denotes both an event and a different element.
Subset parse_event(std::string_view expr, const Frame& frame, const EventMap& events = {});

}  // namespace dsbelief

#endif  // DSBELIEF_EXPRESSION_HPP_
