// Copyright 2026 The Authors.
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


#include <gtest/gtest.h>

#include <algorithm>

#include "mlz/enumerate.hpp"
#include "oracles.hpp"

namespace mlz {
namespace {

TEST(Enumerate, SingleElement) {
  const auto ms = enumerate_matroids(1);
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_TRUE(ms[0].is_loop(1));
  EXPECT_TRUE(ms[1].is_coloop(1));
}

TEST(Enumerate, TwoElementsRankOne) {
  const auto ms = enumerate_matroids(2, 1);
  ASSERT_EQ(ms.size(), 3u);
  EXPECT_EQ(ms[0].bases(), (std::vector<Subset>{{1}}));
  EXPECT_EQ(ms[1].bases(), (std::vector<Subset>{{1}, {2}}));
  EXPECT_EQ(ms[2].bases(), (std::vector<Subset>{{2}}));
}

TEST(Enumerate, KnownCounts) {
  const std::vector<std::size_t> expected{2, 5, 16, 68, 406, 3807};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(enumerate_matroids(n).size(), expected[n - 1]) << "n=" << n;
  }
}

TEST(Enumerate, EveryFamilyValidates) {
  for (int n = 1; n <= 5; ++n) {
    for (const Matroid& m : enumerate_matroids(n)) {
      EXPECT_NO_THROW(validate_bases(n, m.bases()));
    }
  }
}

TEST(Enumerate, CanonicalOrderWithoutDuplicates) {
  const auto ms = enumerate_matroids(5);
  for (std::size_t i = 1; i < ms.size(); ++i) {
    const bool ordered =
        ms[i - 1].rank() < ms[i].rank() ||
        (ms[i - 1].rank() == ms[i].rank() &&
         family_lex_less(ms[i - 1].bases(), ms[i].bases()));
    ASSERT_TRUE(ordered) << i;
  }
}

TEST(Enumerate, SerialAndParallelAgree) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(enumerate_matroids(n, std::nullopt, Execution::kSerial),
              enumerate_matroids(n, std::nullopt, Execution::kParallel));
  }
}

TEST(Enumerate, AgreesWithFlatAxiomOracle) {
  for (int n = 1; n <= 4; ++n) {
    auto expected = oracle::matroids_via_flats(n);
    std::vector<std::vector<Subset>> got;
    for (const Matroid& m : enumerate_matroids(n)) got.push_back(m.bases());
    std::sort(expected.begin(), expected.end(), family_lex_less);
    std::sort(got.begin(), got.end(), family_lex_less);
    EXPECT_EQ(got, expected) << "n=" << n;
  }
}

TEST(Enumerate, RejectsOutOfRange) {
  EXPECT_THROW(enumerate_matroids(0), MatroidError);
  EXPECT_THROW(enumerate_matroids(7), MatroidError);
}

TEST(FamilyExchange, Examples) {
  // 2-subsets of {1,2,3} in mask order: {1,2}, {1,3}, {2,3}.
  EXPECT_TRUE(family_satisfies_exchange(3, 2, 0b111));
  EXPECT_TRUE(family_satisfies_exchange(3, 2, 0b011));
  // 2-subsets of {1..4}: {1,2},{1,3},{2,3},{1,4},{2,4},{3,4}; {1,2},{3,4}.
  EXPECT_FALSE(family_satisfies_exchange(4, 2, 0b100001));
}

}  // namespace
}  // namespace mlz
