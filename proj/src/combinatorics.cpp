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

#include "banzhaf/combinatorics.hpp"

#include <mutex>
#include <string>

#include "banzhaf/errors.hpp"

namespace banzhaf {

binom_table::binom_table(std::size_t max_n) {
  c_.push_back({big_int(1)});
  cum_.push_back({big_int(1)});
  row_total_.push_back(big_int(1));
  reserve(max_n);
}

void binom_table::reserve(std::size_t max_n) {
  for (std::size_t n = c_.size(); n <= max_n; ++n) {
    const auto& prev_c = c_[n - 1];
    const auto& prev_cum = cum_[n - 1];

    std::vector<big_int> row(n + 1);
    row[0] = 1;
    row[n] = 1;
    for (std::size_t k = 1; k < n; ++k) row[k] = prev_c[k] + prev_c[k - 1];

    // Column-wise construction of the cumulative triangle: the diagonal is 1,
    // the top row doubles, interior cells follow the same Pascal recursion.
    std::vector<big_int> cum(n + 1);
    cum[n] = 1;
    for (std::size_t k = n - 1; k >= 1; --k) cum[k] = prev_cum[k] + prev_cum[k - 1];
    cum[0] = 2 * prev_cum[0];

    row_total_.push_back(cum[0]);
    c_.push_back(std::move(row));
    cum_.push_back(std::move(cum));
  }
}

const big_int& binom_table::binom(std::size_t n, std::int64_t k) const {
  if (n > max_n())
    throw domain_error("binom_table: n=" + std::to_string(n) + " exceeds table size " +
                       std::to_string(max_n()));
  if (k < 0 || static_cast<std::size_t>(k) > n) return zero_;
  return c_[n][static_cast<std::size_t>(k)];
}

const big_int& binom_table::cum_binom(std::size_t n, std::int64_t k) const {
  if (n > max_n())
    throw domain_error("binom_table: n=" + std::to_string(n) + " exceeds table size " +
                       std::to_string(max_n()));
  if (k <= 0) return row_total_[n];
  if (static_cast<std::size_t>(k) > n) return zero_;
  return cum_[n][static_cast<std::size_t>(k)];
}

namespace {

std::mutex table_mutex;

binom_table& shared_table() {
  static binom_table table(64);
  return table;
}

}  // namespace

big_int binom(std::size_t n, std::int64_t k) {
  std::lock_guard<std::mutex> lock(table_mutex);
  auto& table = shared_table();
  table.reserve(n);
  return table.binom(n, k);
}

big_int cum_binom(std::size_t n, std::int64_t k) {
  std::lock_guard<std::mutex> lock(table_mutex);
  auto& table = shared_table();
  table.reserve(n);
  return table.cum_binom(n, k);
}

}  // namespace banzhaf
