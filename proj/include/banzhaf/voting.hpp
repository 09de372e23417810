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

/// @file voting.hpp
/// Monotone yes-no voting systems. A scalar-weighted system [T; W_1..W_n]
/// passes a motion iff the yes-weight reaches T. A chamber system is the
/// conjunction of chambers that govern disjoint blocks of voters; each
/// chamber is scalar-weighted or k-out-of-n.
///
/// Voters are numbered globally by concatenating the chambers' voter lists.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "banzhaf/oracle.hpp"
#include "banzhaf/sop.hpp"
#include "banzhaf/symmetric.hpp"

namespace banzhaf {

inline constexpr std::size_t default_mwc_cap = 1'000'000;

/// [T; W_1, ..., W_n] with positive integer weights and 1 <= T <= sum W.
class scalar_system {
 public:
  /// Throws domain_error on an empty voter list, a nonpositive weight, or a
  /// quota outside [1, sum W].
  scalar_system(std::int64_t quota, std::vector<std::int64_t> weights);

  std::int64_t quota() const noexcept { return quota_; }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  std::int64_t total_weight() const noexcept { return total_; }

  /// 2T > sum W. Imprudent systems are legal but let two disjoint
  /// coalitions win at once.
  bool prudent() const noexcept { return 2 * quota_ > total_; }

  bool wins(std::uint64_t coalition) const;

  /// (sum W - T + 1; W): its winning coalitions are exactly the complements
  /// of this system's losing coalitions.
  scalar_system dual() const;

  /// Every weight and the quota multiplied by `factor` (> 0).
  scalar_system scaled(std::int64_t factor) const;

  friend bool operator==(const scalar_system&, const scalar_system&) = default;

 private:
  std::int64_t quota_;
  std::vector<std::int64_t> weights_;
  std::int64_t total_ = 0;
};

/// At least k of n members must approve; 0 <= k <= n.
struct kofn_rule {
  std::size_t k = 0;
  std::size_t n = 0;

  friend bool operator==(const kofn_rule&, const kofn_rule&) = default;
};

class chamber {
 public:
  using rule_type = std::variant<scalar_system, kofn_rule>;

  /// Throws domain_error if the label count differs from the rule's size or
  /// a k-out-of-n rule has k > n.
  chamber(rule_type rule, std::vector<std::string> voters);

  const rule_type& rule() const noexcept { return rule_; }
  const std::vector<std::string>& voters() const noexcept { return voters_; }
  std::size_t size() const noexcept { return voters_.size(); }

  bool is_kofn() const noexcept { return std::holds_alternative<kofn_rule>(rule_); }

  /// The chamber as a k-out-of-n rule when it is one: a k-out-of-n chamber,
  /// or a scalar chamber whose weights are all equal (k = ceil(T / w)).
  std::optional<kofn_rule> as_kofn() const;

  /// Same rule written as weights: k-out-of-n is [k; 1,...,1]. Returns
  /// nullopt for the always-true k = 0 rule, which has no scalar form.
  std::optional<scalar_system> as_scalar() const;

  /// Evaluates on the chamber's own voters (bit i = local voter i).
  bool wins(std::uint64_t local_coalition) const;

  /// Groups of local voters that are interchangeable: all members of a
  /// k-out-of-n chamber, or members of a scalar chamber with equal weight.
  /// Groups are ordered by their first member.
  std::vector<std::vector<std::size_t>> symmetric_blocks() const;

 private:
  rule_type rule_;
  std::vector<std::string> voters_;
};

class chamber_system {
 public:
  /// Throws domain_error on an empty chamber list or duplicate voter labels.
  chamber_system(std::string name, std::vector<chamber> chambers);

  /// A one-chamber system; labels default to X1..Xn.
  static chamber_system single(scalar_system sys, std::vector<std::string> labels = {},
                               std::string name = "");

  const std::string& name() const noexcept { return name_; }
  const std::vector<chamber>& chambers() const noexcept { return chambers_; }
  std::size_t voter_count() const noexcept { return voter_count_; }

  /// Global index of local voter 0 of chamber i.
  std::size_t offset(std::size_t chamber_index) const { return offsets_.at(chamber_index); }
  /// (chamber index, local index) of a global voter.
  std::pair<std::size_t, std::size_t> locate(std::size_t voter) const;
  const std::string& label(std::size_t voter) const;
  std::vector<std::string> labels() const;

  /// Requires voter_count() <= 64.
  bool wins(std::uint64_t coalition) const;
  evaluator as_evaluator() const;

 private:
  std::string name_;
  std::vector<chamber> chambers_;
  std::vector<std::size_t> offsets_;
  std::size_t voter_count_ = 0;
};

/// Minimal winning coalitions as a positive-unate SOP, products ordered by
/// cardinality then lexicographically by voter index. Branch-and-bound over
/// voters sorted by decreasing weight. Throws resource_error past `cap`.
sop_form build_mwc_sop(const scalar_system& sys, std::size_t cap = default_mwc_cap);

/// Prime implicants of the complement: for every maximal losing coalition,
/// the product of the complemented literals of its absent voters. Obtained
/// from the minimal winning coalitions of the dual system.
sop_form build_mlc_sop(const scalar_system& sys, std::size_t cap = default_mwc_cap);

/// Chamber-local MWC / MLC forms (k-out-of-n chambers go through their
/// [k; 1..1] scalar form; the always-true chamber is constant 1 / 0).
sop_form chamber_mwc_sop(const chamber& c, std::size_t cap = default_mwc_cap);
sop_form chamber_mlc_sop(const chamber& c, std::size_t cap = default_mwc_cap);

/// One conjunct of the factored decision function, over global voters `vars`.
struct chamber_factor {
  std::variant<sop_form, sym_function> function;
  std::vector<std::size_t> vars;
};

/// Decision function as a conjunction of per-chamber factors: scalar chambers
/// contribute their MWC form, k-out-of-n chambers their symmetric function.
struct factored_function {
  std::size_t n = 0;
  std::vector<chamber_factor> factors;

  bool evaluate(std::uint64_t coalition) const;
};

factored_function decision_function(const chamber_system& sys,
                                    std::size_t cap = default_mwc_cap);

/// The decision function flattened to one global SOP whose products are the
/// system's minimal winning coalitions (cross products of chamber MWCs).
sop_form materialize(const chamber_system& sys, std::size_t cap = default_mwc_cap);

/// The complement as one global SOP: the union of every chamber's
/// complemented-literal MLC products.
sop_form materialize_complement(const chamber_system& sys, std::size_t cap = default_mwc_cap);

/// Scalar system equivalent to `vetoers` unanimity voters ANDed with a
/// k-out-of-n body: vetoers weigh n-k+1, others 1, quota vetoers*(n-k+1)+k.
/// Throws domain_error for k > n or for the always-true vetoers = k = 0.
scalar_system veto_equivalent_scalar(std::size_t vetoers, std::size_t k, std::size_t n);

}  // namespace banzhaf
