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

#include "banzhaf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "banzhaf/errors.hpp"

namespace banzhaf {

truth_table::truth_table(const evaluator& f, std::size_t n, std::size_t cap) : n_(n) {
  if (n > cap || n > max_oracle_cap)
    throw resource_error("oracle: " + std::to_string(n) + " voters exceed the oracle cap of " +
                         std::to_string(std::min(cap, max_oracle_cap)));
  const std::uint64_t rows = std::uint64_t{1} << n;
  const std::size_t word_count = static_cast<std::size_t>((rows + 63) / 64);
  words_.assign(word_count, 0);

  auto fill = [&](std::size_t first_word, std::size_t last_word) {
    for (std::size_t w = first_word; w < last_word; ++w) {
      std::uint64_t word = 0;
      const std::uint64_t base = static_cast<std::uint64_t>(w) * 64;
      const std::uint64_t end = std::min<std::uint64_t>(64, rows - base);
      for (std::uint64_t b = 0; b < end; ++b)
        if (f(truth_assignment(base + b, n))) word |= std::uint64_t{1} << b;
      words_[w] = word;
    }
  };

  // Threads own disjoint word ranges, so the table is identical to a
  // sequential fill.
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  if (word_count < 1024) threads = 1;
  threads = std::min(threads, word_count);
  if (threads <= 1) {
    fill(0, word_count);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (word_count + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = std::min(word_count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(fill, lo, hi);
  }
  for (auto& th : pool) th.join();
}

std::uint64_t truth_table::weight() const {
  std::uint64_t total = 0;
  for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

std::uint64_t truth_table::swings(std::size_t m) const {
  if (m >= n_)
    throw domain_error("oracle: voter index " + std::to_string(m) + " outside 0.." +
                       std::to_string(n_ == 0 ? 0 : n_ - 1));
  const std::uint64_t bit = std::uint64_t{1} << m;
  const std::uint64_t rows = std::uint64_t{1} << n_;
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < rows; ++x)
    if ((x & bit) && at(x) != at(x ^ bit)) ++count;
  return count;
}

std::uint64_t oracle_weight(const evaluator& f, std::size_t n, std::size_t cap) {
  return truth_table(f, n, cap).weight();
}

std::uint64_t oracle_tbp(const evaluator& f, std::size_t n, std::size_t m, std::size_t cap) {
  return truth_table(f, n, cap).swings(m);
}

std::vector<std::uint64_t> oracle_tbp_all(const evaluator& f, std::size_t n, std::size_t cap) {
  truth_table table(f, n, cap);
  std::vector<std::uint64_t> out(n);
  for (std::size_t m = 0; m < n; ++m) out[m] = table.swings(m);
  return out;
}

monotonicity_result oracle_monotone(const evaluator& f, std::size_t n, std::size_t cap) {
  truth_table table(f, n, cap);
  const std::uint64_t rows = std::uint64_t{1} << n;
  monotonicity_result result;

  // Single-voter steps suffice: any violating chain contains a violating step.
  for (std::size_t m = 0; m < n && result.monotone; ++m) {
    const std::uint64_t bit = std::uint64_t{1} << m;
    for (std::uint64_t x = 0; x < rows; ++x) {
      if (x & bit) continue;
      if (table.at(x) && !table.at(x | bit)) {
        result.monotone = false;
        result.witness = std::pair{x, x | bit};
        break;
      }
    }
  }

  const bool bottom = table.at(0);
  const bool top = table.at(rows - 1);
  const std::uint64_t w = table.weight();
  const bool constant = w == 0 || w == rows;
  result.causal = constant || (!bottom && top);
  return result;
}

}  // namespace banzhaf
