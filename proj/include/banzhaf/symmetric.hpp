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

/// @file symmetric.hpp
/// Symmetric switching functions Sy(n; A; X): true iff the number of inputs
/// set to 1 belongs to the characteristic set A, a subset of {0..n}.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "banzhaf/numeric.hpp"

namespace banzhaf {

class sym_function {
 public:
  /// Throws domain_error if some element of `charset` exceeds n.
  sym_function(std::size_t n, std::vector<std::size_t> charset);
  sym_function(std::size_t n, std::initializer_list<std::size_t> charset)
      : sym_function(n, std::vector<std::size_t>(charset)) {}

  /// Sy(n; {lo..hi}); an empty range when lo > hi.
  static sym_function range(std::size_t n, std::size_t lo, std::size_t hi);

  std::size_t n() const noexcept { return n_; }
  /// Sorted, duplicate-free.
  const std::vector<std::size_t>& charset() const noexcept { return charset_; }

  bool contains(std::size_t count) const;
  bool is_constant_zero() const noexcept { return charset_.empty(); }
  bool is_constant_one() const noexcept { return charset_.size() == n_ + 1; }

  /// True iff the charset is an upward interval {k..n} (or empty), i.e. the
  /// function is monotonically non-decreasing.
  bool is_monotone() const;

  bool evaluate(std::uint64_t assignment) const;

  friend bool operator==(const sym_function&, const sym_function&) = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> charset_;
};

enum class set_op { conjunction, disjunction, exclusive_or };

/// Intersection / union / symmetric difference of the characteristic sets.
/// Throws domain_error when the arities differ.
sym_function sy_combine(const sym_function& lhs, const sym_function& rhs, set_op op);

/// Characteristic set {0..n} \ A.
sym_function sy_complement(const sym_function& f);

/// Boole-Shannon expansion about any one variable X_m:
/// Sy(n;A) = ~X_m Sy(n-1;B) ^ X_m Sy(n-1;C) with B = A & {0..n-1} and
/// C = (A - 1) & {0..n-1}. Returns {B-branch, C-branch}. Throws domain_error
/// when n = 0.
std::pair<sym_function, sym_function> sy_expand(const sym_function& f);

/// Boolean difference w.r.t. any variable: Sy(n-1; B xor C).
sym_function sy_derivative(const sym_function& f);

/// Sum of c(n,a) over the characteristic set.
big_int sy_weight(const sym_function& f);

/// Total Banzhaf power of any one input: sum of c(n-1,a) over B xor C.
/// Zero for n = 0.
big_int sy_tbp(const sym_function& f);

/// The same count via the quotient weights, wt(Sy(n-1;C)) - wt(Sy(n-1;B)).
/// Only valid for monotone f; throws domain_error otherwise.
big_int sy_tbp_via_quotients(const sym_function& f);

/// Success function of a k-out-of-n system, Sy(n; {k..n}). Throws
/// domain_error when k > n.
sym_function kofn_success(std::size_t k, std::size_t n);

std::string to_string(const sym_function& f);

}  // namespace banzhaf
