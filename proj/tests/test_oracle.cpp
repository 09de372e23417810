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

#include <random>

#include "banzhaf/errors.hpp"
#include "banzhaf/oracle.hpp"
#include "test_support.hpp"

namespace banzhaf {
namespace {

using testing::naive_swings;
using testing::naive_weight;
using testing::naive_wins;

evaluator weighted(std::vector<std::int64_t> w, std::int64_t quota) {
  return [w = std::move(w), quota](const truth_assignment& x) {
    return naive_wins(w, quota, x.bits());
  };
}

// Voters P1 P2 X1 X2 X3: a parent and two of three children.
bool family(const truth_assignment& x) {
  const bool parent = x[0] || x[1];
  const int kids = x[2] + x[3] + x[4];
  return parent && kids >= 2;
}

TEST(OracleWeight, KnownCounts) {
  EXPECT_EQ(oracle_weight(weighted({47, 46, 17, 16, 2}, 65), 5), 15u);
  EXPECT_EQ(oracle_weight([](const truth_assignment&) { return false; }, 7), 0u);
  // Unanimity of five permanents and four of ten others.
  auto unsc = [](const truth_assignment& x) {
    int p = 0, n = 0;
    for (std::size_t i = 0; i < 5; ++i) p += x[i];
    for (std::size_t i = 5; i < 15; ++i) n += x[i];
    return p == 5 && n >= 4;
  };
  EXPECT_EQ(oracle_weight(unsc, 15), 848u);
  EXPECT_EQ(oracle_weight(family, 5), 12u);
}

TEST(OracleTbp, KnownSwingCounts) {
  EXPECT_EQ(oracle_tbp(family, 5, 0), 4u);
  EXPECT_EQ(oracle_tbp(family, 5, 2), 6u);
  EXPECT_EQ(oracle_tbp(weighted({1}, 1), 1, 0), 1u);
  EXPECT_EQ(oracle_tbp_all(weighted({47, 46, 17, 16, 2}, 65), 5),
            (std::vector<std::uint64_t>{9, 7, 5, 3, 3}));
  EXPECT_THROW(oracle_tbp(family, 5, 5), domain_error);
}

TEST(OracleTbp, MatchesIndependentCountOnRandomSystems) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = testing::random_scalar(rng, 10, 20);
    const auto w = s.weights();
    const auto n = static_cast<unsigned>(w.size());
    auto f = [&](std::uint64_t x) { return naive_wins(w, s.quota(), x); };
    const auto got = oracle_tbp_all(weighted(w, s.quota()), n);
    const auto wt = oracle_weight(weighted(w, s.quota()), n);
    ASSERT_EQ(wt, naive_weight(f, n));
    for (unsigned m = 0; m < n; ++m) {
      ASSERT_EQ(got[m], naive_swings(f, n, m));
      // Positive-unate form of the swing count.
      std::uint64_t with_m = 0;
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        if (((x >> m) & 1u) && f(x)) ++with_m;
      ASSERT_EQ(got[m], 2 * with_m - wt);
    }
  }
}

TEST(TruthTable, ThreadedFillMatchesDirectEvaluation) {
  // 2^20 rows is large enough to fan out over worker threads.
  const std::vector<std::int64_t> w{9, 8, 8, 7, 6, 6, 5, 5, 4, 4, 3, 3, 3, 2, 2, 2, 1, 1, 1, 1};
  truth_table table(weighted(w, 41), w.size());
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << w.size()); x += 997)
    ASSERT_EQ(table.at(x), naive_wins(w, 41, x));
  EXPECT_EQ(table.weight(), naive_weight([&](std::uint64_t x) { return naive_wins(w, 41, x); },
                                         static_cast<unsigned>(w.size())));
}

TEST(OracleCap, Enforced) {
  auto any = [](const truth_assignment&) { return true; };
  EXPECT_THROW(oracle_weight(any, 25), resource_error);
  EXPECT_THROW(oracle_weight(any, 10, 9), resource_error);
  EXPECT_THROW(oracle_weight(any, 31, 31), resource_error);
  EXPECT_EQ(oracle_weight(any, 10, 10), 1024u);
}

TEST(OracleMonotone, WeightedSystemsAreMonotoneAndCausal) {
  const auto r = oracle_monotone(family, 5);
  EXPECT_TRUE(r.monotone);
  EXPECT_TRUE(r.causal);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_TRUE(oracle_monotone(weighted({47, 46, 17, 16, 2, 1}, 65), 6).monotone);
}

TEST(OracleMonotone, ComplementedLiteralGivesWitness) {
  const auto r = oracle_monotone([](const truth_assignment& x) { return !x[0]; }, 3);
  EXPECT_FALSE(r.monotone);
  EXPECT_FALSE(r.causal);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->first, 0u);
  EXPECT_EQ(r.witness->second, 1u);
}

TEST(OracleMonotone, DetectsSingleDownwardMutation) {
  // Flip a winning row that has a winning one-voter-smaller subset; that
  // subset then wins while the row above it loses.
  const std::vector<std::int64_t> w{47, 46, 17, 16, 2};
  std::mt19937_64 rng(32);
  std::vector<std::uint64_t> winners;
  for (std::uint64_t x = 0; x < 32; ++x) {
    bool has_winning_subset = false;
    for (std::uint64_t r = x; r; r &= r - 1)
      has_winning_subset = has_winning_subset || naive_wins(w, 65, x & ~(r & -r));
    if (naive_wins(w, 65, x) && has_winning_subset) winners.push_back(x);
  }
  ASSERT_FALSE(winners.empty());
  for (int trial = 0; trial < 10; ++trial) {
    const std::uint64_t flipped = winners[rng() % winners.size()];
    auto mutated = [&](const truth_assignment& x) {
      return x.bits() != flipped && naive_wins(w, 65, x.bits());
    };
    const auto r = oracle_monotone(mutated, 5);
    EXPECT_FALSE(r.monotone) << "row " << flipped;
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->second, flipped);
  }
}

TEST(OracleMonotone, ConstantsAreCausal) {
  EXPECT_TRUE(oracle_monotone([](const truth_assignment&) { return true; }, 4).causal);
  EXPECT_TRUE(oracle_monotone([](const truth_assignment&) { return false; }, 4).causal);
  EXPECT_FALSE(oracle_monotone([](const truth_assignment& x) { return x[0] || !x[1]; }, 2).causal);
}

}  // namespace
}  // namespace banzhaf
