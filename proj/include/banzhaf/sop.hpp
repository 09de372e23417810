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

/// @file sop.hpp
/// Sum-of-products switching functions over an n-variable universe:
/// restriction (Boolean quotient), disjointing, weights (number of true
/// minterms) and derivative weights.
///
/// Constant 0 is the empty product list; constant 1 is a single empty product.
/// All weights are counted over the full n-variable universe of the form.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "banzhaf/numeric.hpp"

namespace banzhaf {

enum class polarity : std::uint8_t { negative = 0, positive = 1 };

struct literal {
  std::size_t var = 0;
  polarity pol = polarity::positive;

  static literal pos(std::size_t v) { return {v, polarity::positive}; }
  static literal neg(std::size_t v) { return {v, polarity::negative}; }

  literal operator~() const {
    return {var, pol == polarity::positive ? polarity::negative : polarity::positive};
  }
  bool value() const { return pol == polarity::positive; }

  friend bool operator==(const literal&, const literal&) = default;
};

/// A conjunction of literals, at most one per variable, sorted by variable.
/// The empty product is the constant 1 (literal count 0).
class product {
 public:
  product() = default;

  /// Sorts and deduplicates; throws domain_error if a variable appears with
  /// both polarities.
  explicit product(std::vector<literal> lits);

  std::span<const literal> literals() const noexcept { return lits_; }
  std::size_t size() const noexcept { return lits_.size(); }
  bool empty() const noexcept { return lits_.empty(); }

  std::optional<polarity> polarity_of(std::size_t var) const;
  std::size_t max_var_plus_one() const noexcept {
    return lits_.empty() ? 0 : lits_.back().var + 1;
  }

  /// True iff some variable is complemented in one product and not in the other.
  bool opposes(const product& other) const;

  /// Conjunction; std::nullopt when the two products clash.
  std::optional<product> conjoin(const product& other) const;

  bool evaluate(std::uint64_t assignment) const;
  bool evaluate(std::span<const bool> assignment) const;

  friend bool operator==(const product&, const product&) = default;
  /// Lexicographic over (var, polarity) pairs.
  friend std::strong_ordering operator<=>(const product& a, const product& b);

 private:
  std::vector<literal> lits_;
};

/// Ordered sum of products over variables 0..n-1.
class sop_form {
 public:
  explicit sop_form(std::size_t n, std::vector<product> products = {});

  static sop_form constant_zero(std::size_t n) { return sop_form(n); }
  static sop_form constant_one(std::size_t n) { return sop_form(n, {product{}}); }

  /// Builds a form flagged as disjoint after verifying every pair of products
  /// is in opposition (O(m^2 n)). Throws contract_error otherwise.
  static sop_form certified(std::size_t n, std::vector<product> products);

  std::size_t n() const noexcept { return n_; }
  std::span<const product> products() const& noexcept { return products_; }
  /// A span into a temporary would dangle.
  std::span<const product> products() const&& = delete;
  std::size_t size() const noexcept { return products_.size(); }
  bool disjoint_certified() const noexcept { return disjoint_; }

  /// Re-checks pairwise opposition without trusting the flag.
  bool pairwise_disjoint() const;

  bool evaluate(std::uint64_t assignment) const;
  bool evaluate(std::span<const bool> assignment) const;

 private:
  friend sop_form assume_disjoint(sop_form f);
  std::size_t n_;
  std::vector<product> products_;
  bool disjoint_ = false;
};

/// Variable-indexed restriction f(X | X_var = value). Products holding the
/// opposing literal vanish, the agreeing literal is dropped. Disjointness
/// certification carries over.
sop_form restrict(const sop_form& f, std::size_t var, bool value);

/// Conjunction with a single literal (e.g. (f/X_m) X_m).
sop_form conjoin(const sop_form& f, literal lit);

/// Pairwise conjunction of two forms over the same universe. The result is
/// certified disjoint when both inputs are.
sop_form conjoin(const sop_form& f, const sop_form& g);

/// Same products over a larger universe (new variables are don't-cares).
sop_form lift(const sop_form& f, std::size_t new_n);

/// p minus q as a list of mutually disjoint products, splitting on the
/// literals of q that p lacks in ascending variable order.
std::vector<product> sharp(const product& p, const product& q);

/// The part of `extra` not covered by `base`, as products disjoint from every
/// base product and from each other.
std::vector<product> disjoint_difference(const sop_form& extra, const sop_form& base,
                                         std::size_t max_products = 4'000'000);

/// Sequential sharp-product disjointing. Deterministic; semantically equal to
/// f. Throws resource_error when the output would exceed max_products.
sop_form make_disjoint(const sop_form& f, std::size_t max_products = 4'000'000);

/// Sum of 2^(n - l(D_k)) over a certified disjoint form.
big_int weight_disjoint(const sop_form& f);

/// Inclusion-exclusion weight; works on overlapping products. Clashing
/// conjunctions contribute 0 and prune their supersets. Throws resource_error
/// when f has more than max_products products.
big_int weight_ie(const sop_form& f, std::size_t max_products = 20);

/// Disjoint weight, disjointing first if needed.
big_int weight(const sop_form& f);

/// A form on its own local universe, plus the global variable ids that the
/// local variables 0..form.n()-1 stand for.
struct sop_block {
  sop_form form;
  std::vector<std::size_t> vars;
};

/// Weight of a conjunction of functions over pairwise-disjoint variable
/// blocks: the product of the block weights. Throws domain_error on
/// overlapping blocks or a block whose var list does not match its universe.
big_int weight_conjunction_disjoint_vars(std::span<const sop_block> blocks);

/// 2^n - wt_f. Throws domain_error unless 0 <= wt_f <= 2^n.
big_int complement_weight(const big_int& wt_f, std::size_t n);

/// Weight of the Boolean difference with respect to `var`, counted over the
/// (n-1)-variable universe that excludes `var`:
/// (wt(q1) + wt(q0) - 2 wt(q1 q0)) / 2 with q1, q0 the two restrictions.
big_int derivative_weight(const sop_form& f, std::size_t var);

struct unateness_result {
  bool positive = true;
  /// Syntactic: first complemented literal found. Semantic: the variable
  /// whose 0-restriction is not below its 1-restriction.
  std::optional<std::size_t> witness_var;
  /// Semantic only: an assignment (bit var cleared) with f|0 = 1, f|1 = 0.
  std::optional<std::uint64_t> witness_assignment;
};

/// True iff no product contains a complemented literal.
unateness_result is_positive_unate(const sop_form& f);

/// Truth-table check that f(X|0_m) <= f(X|1_m) for every m. Throws
/// resource_error when f.n() > max_n.
unateness_result is_positive_unate_semantic(const sop_form& f, std::size_t max_n = 20);

/// Human-readable rendering such as "X1 X2 + X1 ~X2 X3"; "0" and "1" for
/// constants. Variables print 1-based.
std::string to_string(const sop_form& f);
std::string to_string(const product& p);

}  // namespace banzhaf
