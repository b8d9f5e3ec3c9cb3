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

#ifndef DSBELIEF_FRAME_HPP_
#define DSBELIEF_FRAME_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dsbelief {

// Subset of a frame as a bitmask: bit i set <=> the i-th element is a member.
using Mask = std::uint32_t;

// Largest frame on which dense set functions (2^n entries) are supported.
inline constexpr std::size_t kMaxFrameSize = 12;

class Subset;

// A finite sample space: an ordered list of distinct, non-empty labels.
// Copies share the label storage.
class Frame {
 public:
  // Throws InvalidFrame (empty frame, duplicate or empty label) or
  // FrameTooLarge (more than kMaxFrameSize elements).
  explicit Frame(std::vector<std::string> labels);
  Frame(std::initializer_list<std::string> labels)
      : Frame(std::vector<std::string>(labels)) {}

  // Frame with labels "a", "b", ... (n <= kMaxFrameSize).
  static Frame letters(std::size_t n);

  std::size_t size() const { return labels_->size(); }
  // Number of subsets, 2^n.
  std::size_t subset_count() const { return std::size_t{1} << size(); }
  Mask full_mask() const { return static_cast<Mask>(subset_count() - 1); }

  const std::vector<std::string>& labels() const { return *labels_; }
  const std::string& label(std::size_t i) const { return (*labels_)[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  Subset subset(Mask bits) const;
  // Throws ParseError for an unknown label.
  Subset subset(const std::vector<std::string>& labels) const;
  Subset empty() const;
  Subset full() const;
  Subset singleton(std::size_t i) const;

  // The frame whose elements are the members of `s`, in the same order.
  Frame restrict(const Subset& s) const;

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

// A subset of a specific frame. Binary operations on subsets of different
// frames throw FrameMismatch.
class Subset {
 public:
  Subset(Frame frame, Mask bits);

  const Frame& frame() const { return frame_; }
  Mask bits() const { return bits_; }
  std::size_t size() const;
  bool empty() const { return bits_ == 0; }
  bool contains(std::size_t element) const { return (bits_ >> element) & 1U; }
  bool is_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  Subset complement() const { return Subset(frame_, frame_.full_mask() & ~bits_); }

  std::vector<std::string> labels() const;
  // "{a,b}" style rendering used in text output.
  std::string to_string() const;

  friend Subset operator|(const Subset& a, const Subset& b);
  friend Subset operator&(const Subset& a, const Subset& b);
  // Set difference.
  friend Subset operator-(const Subset& a, const Subset& b);

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.bits_ == b.bits_ && a.frame_ == b.frame_;
  }

 private:
  Frame frame_;
  Mask bits_;
};

// Throws FrameMismatch unless both frames are equal.
void require_same_frame(const Frame& a, const Frame& b, std::string_view context);

inline int cardinality(Mask m) { return __builtin_popcount(m); }
inline bool is_subset_mask(Mask a, Mask b) { return (a & ~b) == 0; }

// Packs the bits of `m` that lie inside `within` into the low positions,
// preserving order. Inverse of expand_mask.
Mask compress_mask(Mask m, Mask within);
Mask expand_mask(Mask compressed, Mask within);

// All masks over an n-element frame, ordered by cardinality, then by numeric
// value. This is the canonical output order for tables and documents.
std::vector<Mask> canonical_order(std::size_t n);

}  // namespace dsbelief

#endif  // DSBELIEF_FRAME_HPP_
