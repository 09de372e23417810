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

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "banzhaf/errors.hpp"
#include "banzhaf/voting.hpp"
#include "test_support.hpp"

namespace banzhaf {
namespace {

using testing::mask_list;
using testing::naive_wins;

// Bit mask from 1-based voter digits, e.g. 134 -> voters 1, 3, 4.
std::uint64_t digits_mask(int digits) {
  std::uint64_t m = 0;
  for (; digits; digits /= 10) m |= std::uint64_t{1} << (digits % 10 - 1);
  return m;
}

std::vector<std::uint64_t> digit_masks(std::initializer_list<int> sets) {
  std::vector<std::uint64_t> out;
  for (int s : sets) out.push_back(digits_mask(s));
  return out;
}

std::vector<std::string> labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

chamber_system family() {
  return chamber_system("family", {chamber(kofn_rule{1, 2}, {"P1", "P2"}),
                                   chamber(kofn_rule{2, 3}, {"X1", "X2", "X3"})});
}

// Minimal winning coalitions straight from the definition.
std::set<std::uint64_t> naive_mwcs(const std::vector<std::int64_t>& w, std::int64_t quota) {
  std::set<std::uint64_t> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << w.size()); ++x) {
    if (!naive_wins(w, quota, x)) continue;
    bool minimal = true;
    for (std::uint64_t r = x; r && minimal; r &= r - 1)
      minimal = !naive_wins(w, quota, x & ~(r & -r));
    if (minimal) out.insert(x);
  }
  return out;
}

TEST(ScalarSystem, Validation) {
  EXPECT_THROW(scalar_system(1, {}), domain_error);
  EXPECT_THROW(scalar_system(1, {1, 0}), domain_error);
  EXPECT_THROW(scalar_system(0, {1, 2}), domain_error);
  EXPECT_THROW(scalar_system(4, {1, 2}), domain_error);
  const scalar_system s(65, {47, 46, 17, 16, 2});
  EXPECT_EQ(s.total_weight(), 128);
  EXPECT_TRUE(s.prudent());
  EXPECT_FALSE(scalar_system(2, {1, 1, 1, 1}).prudent());
  EXPECT_EQ(s.dual(), scalar_system(64, {47, 46, 17, 16, 2}));
  EXPECT_EQ(s.scaled(3), scalar_system(195, {141, 138, 51, 48, 6}));
  EXPECT_THROW(s.scaled(0), domain_error);
}

TEST(Chamber, KOfNViewsAndBlocks) {
  EXPECT_THROW(chamber(kofn_rule{3, 2}, {"A", "B"}), domain_error);
  EXPECT_THROW(chamber(kofn_rule{1, 2}, {"A"}), domain_error);
  const chamber equal(scalar_system(5, {2, 2, 2}), labels("E", 3));
  ASSERT_TRUE(equal.as_kofn().has_value());
  EXPECT_EQ(*equal.as_kofn(), (kofn_rule{3, 3}));
  const chamber mixed(scalar_system(3, {2, 1, 2, 1}), labels("M", 4));
  EXPECT_FALSE(mixed.as_kofn().has_value());
  EXPECT_EQ(mixed.symmetric_blocks(), (std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}}));
  const chamber k(kofn_rule{2, 3}, labels("K", 3));
  EXPECT_EQ(*k.as_scalar(), scalar_system(2, {1, 1, 1}));
  EXPECT_FALSE(chamber(kofn_rule{0, 0}, {}).as_scalar().has_value());
  EXPECT_TRUE(k.wins(0b011));
  EXPECT_FALSE(k.wins(0b100));
}

TEST(ChamberSystem, LayoutAndLookup) {
  EXPECT_THROW(chamber_system("x", {}), domain_error);
  EXPECT_THROW(chamber_system("x", {chamber(kofn_rule{1, 1}, {"A"}), chamber(kofn_rule{1, 1}, {"A"})}),
               domain_error);
  const chamber_system sys("x", {chamber(kofn_rule{1, 2}, {"A", "B"}), chamber(kofn_rule{0, 0}, {}),
                                 chamber(kofn_rule{1, 1}, {"C"})});
  EXPECT_EQ(sys.voter_count(), 3u);
  EXPECT_EQ(sys.locate(2), (std::pair<std::size_t, std::size_t>{2, 0}));
  EXPECT_EQ(sys.label(1), "B");
  EXPECT_THROW(sys.locate(3), domain_error);
  EXPECT_EQ(chamber_system::single(scalar_system(1, {1, 1})).labels(),
            (std::vector<std::string>{"X1", "X2"}));
}

TEST(BuildMwcSop, FivePartySystemInCanonicalOrder) {
  const sop_form f = build_mwc_sop(scalar_system(65, {47, 46, 17, 16, 2}));
  EXPECT_EQ(mask_list(f), digit_masks({12, 134, 135, 145, 234, 235}));
  EXPECT_TRUE(is_positive_unate(f).positive);
}

TEST(BuildMwcSop, UnanimityAndVetoForm) {
  const sop_form u = build_mwc_sop(scalar_system(6, {1, 2, 3}));
  ASSERT_EQ(u.size(), 1u);
  EXPECT_EQ(u.products()[0].size(), 3u);

  std::vector<std::int64_t> w(5, 7);
  w.resize(15, 1);
  const sop_form f = build_mwc_sop(scalar_system(39, w));
  ASSERT_EQ(f.size(), 210u);
  const auto expected = naive_mwcs(w, 39);
  const auto got = mask_list(f);
  EXPECT_EQ(std::set<std::uint64_t>(got.begin(), got.end()), expected);
  for (auto m : got) {
    EXPECT_EQ(m & 0x1f, 0x1fu);
    EXPECT_EQ(std::popcount(m >> 5), 4);
  }
}

TEST(BuildMwcSop, MatchesDefinitionOnRandomSystems) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = testing::random_scalar(rng, 10, 20);
    const auto got = mask_list(build_mwc_sop(s));
    ASSERT_EQ(std::set<std::uint64_t>(got.begin(), got.end()), naive_mwcs(s.weights(), s.quota()));
    ASSERT_EQ(std::set<std::uint64_t>(got.begin(), got.end()).size(), got.size());
    // Canonical order: cardinality, then lexicographic voter indices.
    const sop_form f = build_mwc_sop(s);
    for (std::size_t i = 1; i < f.size(); ++i) {
      const auto& a = f.products()[i - 1];
      const auto& b = f.products()[i];
      ASSERT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
    }
  }
}

TEST(BuildMwcSop, CapRaisesResourceError) {
  EXPECT_THROW(build_mwc_sop(scalar_system(10, std::vector<std::int64_t>(20, 1)), 1000),
               resource_error);
}

TEST(BuildMlcSop, KnownComplementForms) {
  const sop_form reduced = build_mlc_sop(scalar_system(65, {47, 46, 17, 16, 2}));
  EXPECT_EQ(mask_list(reduced), digit_masks({12, 13, 145, 234, 235, 245}));
  EXPECT_TRUE(std::all_of(reduced.products().begin(), reduced.products().end(), [](const product& p) {
    return std::all_of(p.literals().begin(), p.literals().end(),
                       [](const literal& l) { return l.pol == polarity::negative; });
  }));
  const sop_form extended = build_mlc_sop(scalar_system(65, {47, 46, 17, 16, 2, 1}));
  EXPECT_EQ(mask_list(extended), digit_masks({12, 134, 135, 136, 145, 234, 235, 2456}));
}

TEST(BuildMlcSop, IsComplementOnRandomSystems) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = testing::random_scalar(rng, 10, 20);
    const sop_form g = build_mlc_sop(s);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << s.size()); ++x)
      ASSERT_EQ(g.evaluate(x), !naive_wins(s.weights(), s.quota(), x));
  }
}

TEST(DecisionFunction, FactoredForms) {
  const auto fam = decision_function(family());
  ASSERT_EQ(fam.factors.size(), 2u);
  EXPECT_EQ(std::get<sym_function>(fam.factors[0].function), kofn_success(1, 2));
  EXPECT_EQ(fam.factors[1].vars, (std::vector<std::size_t>{2, 3, 4}));

  const chamber_system unsc("UNSC", {chamber(kofn_rule{5, 5}, labels("P", 5)),
                                     chamber(kofn_rule{4, 10}, labels("N", 10))});
  const auto u = decision_function(unsc);
  EXPECT_EQ(std::get<sym_function>(u.factors[0].function), sym_function(5, {5}));
  EXPECT_EQ(std::get<sym_function>(u.factors[1].function), kofn_success(4, 10));

  const auto single = decision_function(chamber_system::single(scalar_system(65, {47, 46, 17, 16, 2})));
  ASSERT_EQ(single.factors.size(), 1u);
  EXPECT_EQ(mask_list(std::get<sop_form>(single.factors[0].function)),
            digit_masks({12, 134, 135, 145, 234, 235}));

  for (std::uint64_t x = 0; x < 32; ++x) EXPECT_EQ(fam.evaluate(x), family().wins(x));
}

TEST(DecisionFunction, TrivialChamberLeavesFunctionUnchanged) {
  auto chambers = family().chambers();
  chambers.emplace_back(kofn_rule{0, 0}, std::vector<std::string>{});
  const chamber_system extended("family+", chambers);
  const auto f = decision_function(extended);
  for (std::uint64_t x = 0; x < 32; ++x) EXPECT_EQ(f.evaluate(x), family().wins(x));
  EXPECT_EQ(mask_list(materialize(extended)), mask_list(materialize(family())));
}

TEST(Materialize, FamilyPrimeImplicants) {
  const sop_form f = materialize(family());
  EXPECT_EQ(f.size(), 6u);
  const sop_form g = materialize_complement(family());
  // ~P1~P2 plus the three pairs of absent children.
  EXPECT_EQ(g.size(), 4u);
  for (std::uint64_t x = 0; x < 32; ++x) {
    EXPECT_EQ(f.evaluate(x), family().wins(x));
    EXPECT_EQ(g.evaluate(x), !family().wins(x));
  }
  EXPECT_THROW(materialize(family(), 5), resource_error);
}

TEST(VetoEquivalent, KnownAndDerivedConstructions) {
  std::vector<std::int64_t> w(5, 7);
  w.resize(15, 1);
  EXPECT_EQ(veto_equivalent_scalar(5, 4, 10), scalar_system(39, w));
  EXPECT_EQ(veto_equivalent_scalar(0, 3, 7), scalar_system(3, std::vector<std::int64_t>(7, 1)));
  EXPECT_EQ(veto_equivalent_scalar(2, 2, 3), scalar_system(6, {2, 2, 1, 1, 1}));
  EXPECT_THROW(veto_equivalent_scalar(1, 4, 3), domain_error);
  EXPECT_THROW(veto_equivalent_scalar(0, 0, 3), domain_error);
}

TEST(VetoEquivalent, MatchesConjunctionExhaustively) {
  for (std::size_t p = 0; p <= 3; ++p)
    for (std::size_t n = 0; n <= 6; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        if (p == 0 && k == 0) continue;
        const scalar_system s = veto_equivalent_scalar(p, k, n);
        const chamber_system c("c", {chamber(kofn_rule{p, p}, labels("P", p)),
                                     chamber(kofn_rule{k, n}, labels("N", n))});
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << (p + n)); ++x)
          ASSERT_EQ(s.wins(x), c.wins(x)) << p << " " << k << "/" << n;
      }
}

}  // namespace
}  // namespace banzhaf
