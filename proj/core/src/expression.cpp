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

#include "dsbelief/expression.hpp"

#include <cctype>

#include "dsbelief/errors.hpp"

namespace dsbelief {
namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == ':' ||
         c == '/' || c == '#' || c == '@';
}

class Parser {
 public:
  Parser(std::string_view text, const Frame& frame, const EventMap& events)
      : text_(text), frame_(frame), events_(events) {}

  Subset parse() {
    Subset s = parse_union();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("event expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Subset parse_union() {
    Subset s = parse_intersection();
    while (accept('|') || accept(',')) s = s | parse_intersection();
    return s;
  }

  Subset parse_intersection() {
    Subset s = parse_unary();
    while (accept('&')) s = s & parse_unary();
    return s;
  }

  Subset parse_unary() {
    if (accept('~')) return parse_unary().complement();
    return parse_primary();
  }

  Subset parse_primary() {
    if (accept('(')) {
      Subset s = parse_union();
      if (!accept(')')) fail("expected ')'");
      return s;
    }
    if (accept('{')) {
      if (accept('}')) return frame_.empty();
      Subset s = parse_union();
      if (!accept('}')) fail("expected '}'");
      return s;
    }
    if (accept('*')) return frame_.full();
    skip_space();
    const std::size_t start = pos_;
    const std::string name = parse_name();
    return resolve(name, start);
  }

  std::string parse_name() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a name");
    const char open = text_[pos_];
    if (open == '\'' || open == '"') {
      const std::size_t close = text_.find(open, pos_ + 1);
      if (close == std::string_view::npos) fail("unterminated quote");
      std::string name(text_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      return name;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  Subset resolve(const std::string& name, std::size_t start) {
    const auto event = events_.find(name);
    const auto element = frame_.index_of(name);
    if (event != events_.end()) {
      if (element && !(event->second == frame_.singleton(*element))) {
        pos_ = start;
        fail("'" + name + "' is both an event and a different element");
      }
      return event->second;
    }
    if (element) return frame_.singleton(*element);
    pos_ = start;
    fail("unknown event or element '" + name + "'");
  }

  std::string_view text_;
  const Frame& frame_;
  const EventMap& events_;
  std::size_t pos_ = 0;
};

}  // namespace

Subset parse_event(std::string_view expr, const Frame& frame, const EventMap& events) {
  for (const auto& [name, subset] : events) require_same_frame(frame, subset.frame(), "parse_event");
  return Parser(expr, frame, events).parse();
}

}  // namespace dsbelief
