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

/// @file combinatorics.hpp
/// Exact binomial coefficients c(n,k) and cumulative binomial coefficients
/// C(n,k) = sum_{m>=k} c(n,m), both kept in Pascal-style triangles.
///
/// Out-of-range k never throws: c(n,k) = 0 for k < 0 or k > n, and
/// C(n,k) = 2^n for k <= 0, 0 for k > n. With these conventions the weight of
/// a k-out-of-n function is C(n,k) for every 0 <= k <= n+1.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "banzhaf/numeric.hpp"

namespace banzhaf {

/// Triangular tables of c(n,k) and C(n,k) for 0 <= k <= n <= max_n().
///
/// Reads are const and may be shared between threads; reserve() mutates and
/// must not race with readers.
class binom_table {
 public:
  explicit binom_table(std::size_t max_n = 0);

  /// Extends both triangles column by column up to n = max_n.
  void reserve(std::size_t max_n);

  std::size_t max_n() const noexcept { return c_.size() - 1; }

  /// c(n,k). Throws domain_error if n > max_n().
  const big_int& binom(std::size_t n, std::int64_t k) const;

  /// C(n,k). Throws domain_error if n > max_n().
  const big_int& cum_binom(std::size_t n, std::int64_t k) const;

 private:
  std::vector<std::vector<big_int>> c_;
  std::vector<std::vector<big_int>> cum_;
  big_int zero_ = 0;
  std::vector<big_int> row_total_;  // 2^n, returned for C(n, k<=0)
};

/// c(n,k) from a process-wide memoized table (grown under a lock).
big_int binom(std::size_t n, std::int64_t k);

/// C(n,k) from a process-wide memoized table (grown under a lock).
big_int cum_binom(std::size_t n, std::int64_t k);

}  // namespace banzhaf
