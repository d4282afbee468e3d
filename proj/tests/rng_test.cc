// Copyright 2026 The samgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "samgen/rng.h"

#include <algorithm>
#include <set>

#include "gtest/gtest.h"

namespace samgen {
namespace {

TEST(RngTest, SameSeedSameSequence) {
  Rng a(123);
  Rng b(123);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.Next(), b.Next());
}

TEST(RngTest, DerivedSeedsDifferPerStream) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 1000; ++s) seeds.insert(DeriveSeed(42, s));
  EXPECT_EQ(seeds.size(), 1000u);
  EXPECT_NE(DeriveSeed(42, "plan"), DeriveSeed(43, "plan"));
  EXPECT_EQ(DeriveSeed(42, "plan"), DeriveSeed(42, "plan"));
}

TEST(RngTest, BelowStaysInRange) {
  Rng rng(7);
  for (std::uint64_t n = 1; n < 50; ++n) {
    for (int i = 0; i < 20; ++i) EXPECT_LT(rng.Below(n), n);
  }
}

TEST(RngTest, BetweenCoversBothEnds) {
  Rng rng(9);
  std::set<int> seen;
  for (int i = 0; i < 2000; ++i) {
    int v = rng.Between(-2, 3);
    ASSERT_GE(v, -2);
    ASSERT_LE(v, 3);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 6u);
}

// Property: Distinct returns k distinct values inside the range.
TEST(RngTest, DistinctProperty) {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    int lo = rng.Between(0, 20);
    int hi = lo + rng.Between(0, 30);
    std::size_t k = rng.Below(static_cast<std::uint64_t>(hi - lo + 2));
    std::vector<int> values = rng.Distinct(lo, hi, k);
    ASSERT_EQ(values.size(), k);
    std::set<int> unique(values.begin(), values.end());
    EXPECT_EQ(unique.size(), k);
    for (int v : values) {
      EXPECT_GE(v, lo);
      EXPECT_LE(v, hi);
    }
  }
}

TEST(RngTest, ShuffleIsPermutation) {
  Rng rng(5);
  std::vector<int> v(30);
  for (int i = 0; i < 30; ++i) v[i] = i;
  std::vector<int> w = v;
  rng.Shuffle(w);
  std::sort(w.begin(), w.end());
  EXPECT_EQ(v, w);
}

}  // namespace
}  // namespace samgen
