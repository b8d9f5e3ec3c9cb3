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

#include <algorithm>

#include "dsbelief/errors.hpp"
#include "dsbelief/frame.hpp"

namespace dsbelief {
namespace {

TEST(Frame, RejectsInvalidLabels) {
  EXPECT_THROW(Frame(std::vector<std::string>{}), InvalidFrame);
  EXPECT_THROW((Frame{"a", "a"}), InvalidFrame);
  EXPECT_THROW((Frame{"a", ""}), InvalidFrame);
  EXPECT_THROW(Frame::letters(kMaxFrameSize + 1), FrameTooLarge);
  EXPECT_NO_THROW(Frame::letters(kMaxFrameSize));
}

TEST(Frame, SubsetIndexingFollowsElementOrder) {
  const Frame f{"x", "y", "z"};
  EXPECT_EQ(f.subset_count(), 8U);
  EXPECT_EQ(f.full_mask(), 7U);
  for (Mask k = 0; k < f.subset_count(); ++k) {
    const Subset s = f.subset(k);
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(s.contains(i), ((k >> i) & 1U) == 1U);
  }
  EXPECT_EQ(f.subset(std::vector<std::string>{"z", "x"}).bits(), 5U);
  EXPECT_EQ(f.subset(5).labels(), (std::vector<std::string>{"x", "z"}));
  EXPECT_EQ(f.subset(5).to_string(), "{x,z}");
  EXPECT_EQ(f.empty().to_string(), "{}");
  EXPECT_THROW(f.subset(std::vector<std::string>{"w"}), ParseError);
  EXPECT_EQ(f.index_of("y"), std::optional<std::size_t>(1));
  EXPECT_FALSE(f.index_of("w").has_value());
}

TEST(Frame, EqualityByLabels) {
  EXPECT_EQ(Frame::letters(3), (Frame{"a", "b", "c"}));
  EXPECT_FALSE(Frame::letters(3) == (Frame{"a", "c", "b"}));
}

TEST(Subset, BooleanAlgebraLaws) {
  const Frame f = Frame::letters(4);
  for (Mask x = 0; x < f.subset_count(); ++x) {
    const Subset a = f.subset(x);
    EXPECT_EQ(a.complement().complement(), a);
    EXPECT_EQ(a | a.complement(), f.full());
    EXPECT_EQ(a & a.complement(), f.empty());
    for (Mask y = 0; y < f.subset_count(); ++y) {
      const Subset b = f.subset(y);
      EXPECT_EQ(a | b, b | a);
      EXPECT_EQ(a & b, b & a);
      EXPECT_EQ((a | b).complement(), a.complement() & b.complement());
      EXPECT_EQ((a & b).complement(), a.complement() | b.complement());
      EXPECT_EQ(a - b, a & b.complement());
      EXPECT_EQ(a | (a & b), a);
      EXPECT_EQ(a.is_subset_of(b), (a & b) == a);
      EXPECT_EQ(a.intersects(b), !(a & b).empty());
      for (Mask z = 0; z < f.subset_count(); z += 3) {
        const Subset c = f.subset(z);
        EXPECT_EQ(a & (b | c), (a & b) | (a & c));
        EXPECT_EQ(a | (b & c), (a | b) & (a | c));
      }
    }
  }
}

TEST(Subset, OperationsAcrossFramesFail) {
  const Subset a = Frame::letters(3).subset(1);
  const Subset b = Frame{"p", "q", "r"}.subset(1);
  EXPECT_THROW((void)(a | b), FrameMismatch);
  EXPECT_THROW((void)(a & b), FrameMismatch);
  EXPECT_THROW((void)(a - b), FrameMismatch);
  EXPECT_THROW((void)a.is_subset_of(b), FrameMismatch);
}

TEST(Frame, RestrictKeepsOrder) {
  const Frame f{"p", "q", "r", "s"};
  const Frame sub = f.restrict(f.subset(std::vector<std::string>{"s", "q"}));
  EXPECT_EQ(sub.labels(), (std::vector<std::string>{"q", "s"}));
}

TEST(Mask, CompressExpandRoundTrip) {
  const Mask within = 0b101101;
  for (Mask m = 0; m < 64; ++m) {
    const Mask inside = m & within;
    EXPECT_EQ(expand_mask(compress_mask(inside, within), within), inside);
  }
  EXPECT_EQ(compress_mask(0b100100, within), 0b1010U);
}

TEST(Mask, CanonicalOrderByCardinalityThenMask) {
  const auto order = canonical_order(3);
  EXPECT_EQ(order, (std::vector<Mask>{0, 1, 2, 4, 3, 5, 6, 7}));
  const auto big = canonical_order(6);
  EXPECT_EQ(big.size(), 64U);
  EXPECT_TRUE(std::is_sorted(big.begin(), big.end(), [](Mask a, Mask b) {
    return cardinality(a) != cardinality(b) ? cardinality(a) < cardinality(b) : a < b;
  }));
}

}  // namespace
}  // namespace dsbelief
