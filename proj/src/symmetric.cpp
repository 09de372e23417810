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

#include "banzhaf/symmetric.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

#include "banzhaf/combinatorics.hpp"
#include "banzhaf/errors.hpp"

namespace banzhaf {

sym_function::sym_function(std::size_t n, std::vector<std::size_t> charset)
    : n_(n), charset_(std::move(charset)) {
  std::sort(charset_.begin(), charset_.end());
  charset_.erase(std::unique(charset_.begin(), charset_.end()), charset_.end());
  if (!charset_.empty() && charset_.back() > n_)
    throw domain_error("sym_function: characteristic set element " +
                       std::to_string(charset_.back()) + " exceeds n = " + std::to_string(n_));
}

sym_function sym_function::range(std::size_t n, std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> a;
  for (std::size_t i = lo; i <= hi; ++i) a.push_back(i);
  return sym_function(n, std::move(a));
}

bool sym_function::contains(std::size_t count) const {
  return std::binary_search(charset_.begin(), charset_.end(), count);
}

bool sym_function::is_monotone() const {
  if (charset_.empty()) return true;
  return charset_.back() == n_ && charset_.size() == n_ - charset_.front() + 1;
}

bool sym_function::evaluate(std::uint64_t assignment) const {
  std::uint64_t mask = n_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  return contains(static_cast<std::size_t>(std::popcount(assignment & mask)));
}

sym_function sy_combine(const sym_function& lhs, const sym_function& rhs, set_op op) {
  if (lhs.n() != rhs.n())
    throw domain_error("sy_combine: arity mismatch (" + std::to_string(lhs.n()) + " vs " +
                       std::to_string(rhs.n()) + ")");
  const auto& a = lhs.charset();
  const auto& b = rhs.charset();
  std::vector<std::size_t> out;
  switch (op) {
    case set_op::conjunction:
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
      break;
    case set_op::disjunction:
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
      break;
    case set_op::exclusive_or:
      std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                    std::back_inserter(out));
      break;
  }
  return sym_function(lhs.n(), std::move(out));
}

sym_function sy_complement(const sym_function& f) {
  return sy_combine(f, sym_function::range(f.n(), 0, f.n()), set_op::exclusive_or);
}

std::pair<sym_function, sym_function> sy_expand(const sym_function& f) {
  if (f.n() == 0) throw domain_error("sy_expand: a 0-variable function has no variable to expand");
  const std::size_t m = f.n() - 1;
  std::vector<std::size_t> b;
  std::vector<std::size_t> c;
  for (auto a : f.charset()) {
    if (a <= m) b.push_back(a);
    if (a >= 1) c.push_back(a - 1);  // a - 1 <= m always
  }
  return {sym_function(m, std::move(b)), sym_function(m, std::move(c))};
}

sym_function sy_derivative(const sym_function& f) {
  auto [b, c] = sy_expand(f);
  return sy_combine(b, c, set_op::exclusive_or);
}

big_int sy_weight(const sym_function& f) {
  big_int total = 0;
  for (auto a : f.charset()) total += binom(f.n(), static_cast<std::int64_t>(a));
  return total;
}

big_int sy_tbp(const sym_function& f) {
  if (f.n() == 0) return 0;
  return sy_weight(sy_derivative(f));
}

big_int sy_tbp_via_quotients(const sym_function& f) {
  if (!f.is_monotone())
    throw domain_error("sy_tbp_via_quotients: " + to_string(f) + " is not monotone");
  if (f.n() == 0) return 0;
  auto [b, c] = sy_expand(f);
  return sy_weight(c) - sy_weight(b);
}

sym_function kofn_success(std::size_t k, std::size_t n) {
  if (k > n)
    throw domain_error("kofn_success: k = " + std::to_string(k) + " exceeds n = " +
                       std::to_string(n));
  return sym_function::range(n, k, n);
}

std::string to_string(const sym_function& f) {
  std::string out = "Sy(" + std::to_string(f.n()) + "; {";
  const auto& a = f.charset();
  for (std::size_t i = 0; i < a.size();) {
    std::size_t j = i;
    while (j + 1 < a.size() && a[j + 1] == a[j] + 1) ++j;
    if (i != 0) out += ",";
    out += std::to_string(a[i]);
    if (j > i + 1)
      out += ".." + std::to_string(a[j]);
    else if (j == i + 1)
      out += "," + std::to_string(a[j]);
    i = j + 1;
  }
  return out + "})";
}

}  // namespace banzhaf
