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

/// @file oracle.hpp
/// Brute-force ground truth over all 2^n primitive coalitions. Every other
/// route in the library is tested against these counts.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace banzhaf {

inline constexpr std::size_t default_oracle_cap = 24;
/// Absolute ceiling regardless of the configured cap (2^30 bits = 128 MiB).
inline constexpr std::size_t max_oracle_cap = 30;

/// One primitive coalition: bit i is voter i's vote.
class truth_assignment {
 public:
  truth_assignment(std::uint64_t bits, std::size_t n) : bits_(bits), n_(n) {}

  bool operator[](std::size_t i) const { return (bits_ >> i) & 1u; }
  std::size_t size() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }

 private:
  std::uint64_t bits_;
  std::size_t n_;
};

using evaluator = std::function<bool(const truth_assignment&)>;

/// The full output column of an evaluator. Construction may fan out over
/// threads; the evaluator must be safe to call concurrently.
class truth_table {
 public:
  /// Throws resource_error when n exceeds cap (or max_oracle_cap).
  truth_table(const evaluator& f, std::size_t n, std::size_t cap = default_oracle_cap);

  std::size_t n() const noexcept { return n_; }
  bool at(std::uint64_t row) const { return (words_[row >> 6] >> (row & 63)) & 1u; }

  std::uint64_t weight() const;
  /// Rows with bit m set whose value differs from the row with bit m cleared.
  std::uint64_t swings(std::size_t m) const;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

std::uint64_t oracle_weight(const evaluator& f, std::size_t n,
                            std::size_t cap = default_oracle_cap);

/// Number of primitive coalitions whose outcome flips with voter m's vote,
/// counted once per flipping pair.
std::uint64_t oracle_tbp(const evaluator& f, std::size_t n, std::size_t m,
                         std::size_t cap = default_oracle_cap);

/// oracle_tbp for every voter off a single tabulation.
std::vector<std::uint64_t> oracle_tbp_all(const evaluator& f, std::size_t n,
                                          std::size_t cap = default_oracle_cap);

struct monotonicity_result {
  bool monotone = true;
  /// f(0...0) = 0 and f(1...1) = 1; vacuously true for constant functions.
  bool causal = true;
  /// (lower, upper) with upper = lower plus one voter, f(lower)=1, f(upper)=0.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
};

monotonicity_result oracle_monotone(const evaluator& f, std::size_t n,
                                    std::size_t cap = default_oracle_cap);

}  // namespace banzhaf
