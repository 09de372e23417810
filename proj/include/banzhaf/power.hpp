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

/// @file power.hpp
/// Banzhaf power of chamber systems. TBP (total Banzhaf power) of voter m is
/// the number of primitive coalitions of the other voters in which m's vote
/// decides the outcome; NTBP normalizes it by the sum over all voters.
///
/// Every route below returns the same exact integers. They differ in which
/// representation of the decision function they work from.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "banzhaf/numeric.hpp"
#include "banzhaf/voting.hpp"

namespace banzhaf {

enum class method {
  automatic,      ///< closed_form, else quotient_pos, else subset_sum, else oracle
  derivative,     ///< wt(df/dX_m)
  quotient_pos,   ///< 2 wt((f/X_m) X_m) - wt(f)
  quotient_neg,   ///< wt(f) - 2 wt((f/~X_m) ~X_m)
  quotient_diff,  ///< wt((f/X_m) X_m) - wt((f/~X_m) ~X_m)
  complement,     ///< wt(~f) - 2 wt((~f/X_m) X_m), from the MLC form of ~f
  closed_form,    ///< c(n_i-1, k_i-1) prod_{j!=i} C(n_j, k_j); k-out-of-n chambers only
  oracle,         ///< exhaustive truth table
  subset_sum,     ///< weight-total counting; single scalar chamber only
};

std::string to_string(method m);
/// Accepts the names printed by to_string plus "auto". nullopt otherwise.
std::optional<method> parse_method(std::string_view name);

struct compute_options {
  std::size_t oracle_cap = default_oracle_cap;
  std::size_t mwc_cap = default_mwc_cap;
  std::size_t disjoint_cap = 4'000'000;
  /// Largest total weight the subset-sum route will tabulate.
  std::int64_t subset_sum_cap = 10'000'000;
  /// Evaluate symmetric blocks on worker threads. Output is identical either way.
  bool parallel = true;
};

struct voter_power {
  std::string label;
  std::size_t chamber = 0;
  big_int tbp;
  rational ntbp;
  bool dummy = false;
};

struct power_report {
  std::string system_name;
  /// The route that produced the numbers (never `automatic`).
  method used = method::oracle;
  std::vector<voter_power> voters;
  big_int total_tbp;
  /// Non-fatal remarks, e.g. imprudent quotas.
  std::vector<std::string> warnings;
};

/// TBP for every voter, in global voter order. Voters of one symmetric block
/// are computed once. Throws unsupported_method_error when the route does not
/// apply to the system's shape and resource_error when a cap is exceeded.
std::vector<big_int> tbp_vector(const chamber_system& sys, method m,
                                const compute_options& opts = {});

/// tbp_vector plus NTBP, dummy flags and warnings. With method::automatic the
/// report names the route that succeeded.
power_report tbp_report(const chamber_system& sys, method m, const compute_options& opts = {});

/// TBP of any member of chamber `chamber_index` when every chamber is
/// k-out-of-n (possibly written as equal weights). Throws
/// unsupported_method_error otherwise.
big_int chamber_closed_form_tbp(const chamber_system& sys, std::size_t chamber_index);

/// Swing counts of a scalar system by counting subsets of the other voters
/// per weight total. O(n * sum W) time. Throws resource_error when sum W
/// exceeds `max_total`.
std::vector<big_int> subset_sum_tbp(const scalar_system& sys,
                                    std::int64_t max_total = 10'000'000);

/// wt(f) from the chamber MWC forms, multiplied across chambers.
big_int decision_weight(const chamber_system& sys, const compute_options& opts = {});

/// wt(~f) from the disjointed union of chamber MLC forms.
big_int complement_decision_weight(const chamber_system& sys, const compute_options& opts = {});

struct pgi_counts {
  /// Number of minimal winning coalitions containing the voter.
  std::vector<std::size_t> pgi;
  /// Number of maximal-losing-coalition products holding the voter's
  /// complemented literal.
  std::vector<std::size_t> cpgi;
};

/// Counts over the system's materialized MWC and MLC forms. For multi-chamber
/// systems these are the prime implicants of the whole conjunction and of its
/// complement. Throws resource_error past opts.mwc_cap.
pgi_counts pgi_cpgi(const chamber_system& sys, const compute_options& opts = {});

struct swap_witness {
  std::uint64_t first = 0;   ///< winning coalition containing `a`
  std::uint64_t second = 0;  ///< winning coalition containing `b`
  std::size_t a = 0;
  std::size_t b = 0;
};

struct swap_result {
  bool robust = true;
  std::optional<swap_witness> witness;
};

/// Looks for two winning coalitions C1, C2 and voters a in C1\C2, b in C2\C1
/// such that exchanging a and b leaves both coalitions losing. Checking pairs
/// of minimal winning coalitions is enough for monotone systems. Requires
/// voter_count() <= oracle_cap; throws resource_error otherwise.
swap_result swap_robust_check(const chamber_system& sys, const compute_options& opts = {});

}  // namespace banzhaf
