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

#include "dsbelief/frame.hpp"

#include <algorithm>
#include <unordered_set>

#include "dsbelief/errors.hpp"

namespace dsbelief {

Frame::Frame(std::vector<std::string> labels) {
  if (labels.empty()) throw InvalidFrame("frame must have at least one element");
  if (labels.size() > kMaxFrameSize) throw FrameTooLarge(labels.size(), kMaxFrameSize, "frame");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw InvalidFrame("frame labels must be non-empty");
    if (!seen.insert(l).second) throw InvalidFrame("duplicate frame label '" + l + "'");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

Frame Frame::letters(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return Frame(std::move(labels));
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const {
  const auto it = std::find(labels_->begin(), labels_->end(), label);
  if (it == labels_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_->begin());
}

Subset Frame::subset(Mask bits) const { return Subset(*this, bits); }

Subset Frame::subset(const std::vector<std::string>& labels) const {
  Mask bits = 0;
  for (const auto& l : labels) {
    const auto i = index_of(l);
    if (!i) throw ParseError("unknown element '" + l + "'");
    bits |= Mask{1} << *i;
  }
  return Subset(*this, bits);
}

Subset Frame::empty() const { return Subset(*this, 0); }
Subset Frame::full() const { return Subset(*this, full_mask()); }

Subset Frame::singleton(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("Frame::singleton: index out of range");
  return Subset(*this, Mask{1} << i);
}

Frame Frame::restrict(const Subset& s) const {
  require_same_frame(*this, s.frame(), "Frame::restrict");
  return Frame(s.labels());
}

Subset::Subset(Frame frame, Mask bits) : frame_(std::move(frame)), bits_(bits) {
  if ((bits & ~frame_.full_mask()) != 0) throw std::out_of_range("Subset: bits outside the frame");
}

std::size_t Subset::size() const { return static_cast<std::size_t>(cardinality(bits_)); }

bool Subset::is_subset_of(const Subset& other) const {
  require_same_frame(frame_, other.frame_, "Subset::is_subset_of");
  return is_subset_mask(bits_, other.bits_);
}

bool Subset::intersects(const Subset& other) const {
  require_same_frame(frame_, other.frame_, "Subset::intersects");
  return (bits_ & other.bits_) != 0;
}

std::vector<std::string> Subset::labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < frame_.size(); ++i) {
    if (contains(i)) out.push_back(frame_.label(i));
  }
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels()) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

Subset operator|(const Subset& a, const Subset& b) {
  require_same_frame(a.frame_, b.frame_, "subset union");
  return Subset(a.frame_, a.bits_ | b.bits_);
}

Subset operator&(const Subset& a, const Subset& b) {
  require_same_frame(a.frame_, b.frame_, "subset intersection");
  return Subset(a.frame_, a.bits_ & b.bits_);
}

Subset operator-(const Subset& a, const Subset& b) {
  require_same_frame(a.frame_, b.frame_, "subset difference");
  return Subset(a.frame_, a.bits_ & ~b.bits_);
}

void require_same_frame(const Frame& a, const Frame& b, std::string_view context) {
  if (!(a == b)) throw FrameMismatch(std::string(context) + ": operands belong to different frames");
}

Mask compress_mask(Mask m, Mask within) {
  Mask out = 0;
  int pos = 0;
  for (Mask w = within; w != 0; w &= w - 1) {
    const Mask low = w & -w;
    if (m & low) out |= Mask{1} << pos;
    ++pos;
  }
  return out;
}

Mask expand_mask(Mask compressed, Mask within) {
  Mask out = 0;
  int pos = 0;
  for (Mask w = within; w != 0; w &= w - 1) {
    const Mask low = w & -w;
    if ((compressed >> pos) & 1U) out |= low;
    ++pos;
  }
  return out;
}

std::vector<Mask> canonical_order(std::size_t n) {
  std::vector<Mask> order(std::size_t{1} << n);
  for (Mask m = 0; m < order.size(); ++m) order[m] = m;
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) {
    return cardinality(a) < cardinality(b);
  });
  return order;
}

}  // namespace dsbelief
