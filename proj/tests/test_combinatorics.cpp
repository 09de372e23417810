// Copyright 2026 The banzhaf-switch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "banzhaf/combinatorics.hpp"
#include "banzhaf/errors.hpp"
#include "test_support.hpp"

namespace banzhaf {
namespace {

using testing::naive_binom;

// Rows k = 0..10 of both triangles, columns n = k..10.
const std::vector<std::vector<int>> reference_c = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
    {1, 3, 6, 10, 15, 21, 28, 36, 45},
    {1, 4, 10, 20, 35, 56, 84, 120},
    {1, 5, 15, 35, 70, 126, 210},
    {1, 6, 21, 56, 126, 252},
    {1, 7, 28, 84, 210},
    {1, 8, 36, 120},
    {1, 9, 45},
    {1, 10},
    {1},
};
const std::vector<std::vector<int>> reference_cum = {
    {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024},
    {1, 3, 7, 15, 31, 63, 127, 255, 511, 1023},
    {1, 4, 11, 26, 57, 120, 247, 502, 1013},
    {1, 5, 16, 42, 99, 219, 466, 968},
    {1, 6, 22, 64, 163, 382, 848},
    {1, 7, 29, 93, 256, 638},
    {1, 8, 37, 130, 386},
    {1, 9, 46, 176},
    {1, 10, 56},
    {1, 11},
    {1},
};

TEST(BinomTable, ReproducesReferenceTrianglesUpToTen) {
  binom_table t(10);
  for (std::size_t k = 0; k <= 10; ++k) {
    for (std::size_t j = 0; j < reference_c[k].size(); ++j) {
      const std::size_t n = k + j;
      EXPECT_EQ(t.binom(n, static_cast<std::int64_t>(k)), reference_c[k][j]) << n << "," << k;
      EXPECT_EQ(t.cum_binom(n, static_cast<std::int64_t>(k)), reference_cum[k][j]) << n << "," << k;
    }
  }
  EXPECT_EQ(t.binom(9, 3), 84);
  EXPECT_EQ(t.cum_binom(10, 4), 848);
}

TEST(BinomTable, AgreesWithMultiplicativeFormulaUpTo64) {
  binom_table t(64);
  for (std::int64_t n = 0; n <= 64; ++n) {
    big_int running = 0;
    for (std::int64_t k = n; k >= 0; --k) {
      running += naive_binom(n, k);
      ASSERT_EQ(t.binom(static_cast<std::size_t>(n), k), naive_binom(n, k));
      ASSERT_EQ(t.cum_binom(static_cast<std::size_t>(n), k), running);
    }
  }
}

TEST(BinomTable, RecursionsAndDifferencing) {
  binom_table t(40);
  for (std::size_t n = 1; n <= 40; ++n) {
    EXPECT_EQ(t.cum_binom(n, 0), pow2(n));
    EXPECT_EQ(t.cum_binom(n, static_cast<std::int64_t>(n)), 1);
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k)
      EXPECT_EQ(t.binom(n, k), t.cum_binom(n, k) - t.cum_binom(n, k + 1));
    for (std::int64_t k = 1; k < static_cast<std::int64_t>(n); ++k)
      EXPECT_EQ(t.cum_binom(n, k), t.cum_binom(n - 1, k) + t.cum_binom(n - 1, k - 1));
  }
}

TEST(BinomTable, OutOfRangeConventions) {
  binom_table t(5);
  EXPECT_EQ(t.binom(5, -1), 0);
  EXPECT_EQ(t.binom(5, 6), 0);
  EXPECT_EQ(t.cum_binom(5, -3), 32);
  EXPECT_EQ(t.cum_binom(5, 6), 0);
  EXPECT_EQ(t.cum_binom(0, 0), 1);
  EXPECT_THROW(t.binom(6, 1), domain_error);
  EXPECT_THROW(t.cum_binom(6, 1), domain_error);
}

TEST(SharedBinom, LargeCumulativeMatchesDirectSum) {
  big_int direct = 0;
  for (std::int64_t m = 218; m <= 435; ++m) direct += naive_binom(435, m);
  EXPECT_EQ(cum_binom(435, 218), direct);
  EXPECT_EQ(binom(434, 217), naive_binom(434, 217));
}

TEST(SharedBinom, ConcurrentGrowthIsConsistent) {
  std::vector<std::thread> pool;
  std::vector<big_int> got(8);
  for (std::size_t i = 0; i < got.size(); ++i)
    pool.emplace_back([&, i] { got[i] = cum_binom(100 + 10 * i, 50); });
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < got.size(); ++i) {
    big_int direct = 0;
    const auto n = static_cast<std::int64_t>(100 + 10 * i);
    for (std::int64_t m = 50; m <= n; ++m) direct += naive_binom(n, m);
    EXPECT_EQ(got[i], direct);
  }
}

}  // namespace
}  // namespace banzhaf
