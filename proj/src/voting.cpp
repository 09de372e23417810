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

#include "banzhaf/voting.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "banzhaf/errors.hpp"

namespace banzhaf {

// ---------------------------------------------------------------------------
// scalar_system

scalar_system::scalar_system(std::int64_t quota, std::vector<std::int64_t> weights)
    : quota_(quota), weights_(std::move(weights)) {
  if (weights_.empty()) throw domain_error("scalar system needs at least one voter");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] <= 0)
      throw domain_error("weight of voter " + std::to_string(i + 1) + " must be positive, got " +
                         std::to_string(weights_[i]));
    total_ += weights_[i];
  }
  if (quota_ < 1 || quota_ > total_)
    throw domain_error("quota " + std::to_string(quota_) + " outside [1, " +
                       std::to_string(total_) + "]");
}

bool scalar_system::wins(std::uint64_t coalition) const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if ((coalition >> i) & 1u) sum += weights_[i];
  return sum >= quota_;
}

scalar_system scalar_system::dual() const { return scalar_system(total_ - quota_ + 1, weights_); }

scalar_system scalar_system::scaled(std::int64_t factor) const {
  if (factor <= 0) throw domain_error("scale factor must be positive");
  std::vector<std::int64_t> w = weights_;
  for (auto& x : w) x *= factor;
  return scalar_system(quota_ * factor, std::move(w));
}

// ---------------------------------------------------------------------------
// chamber

namespace {

std::size_t rule_size(const chamber::rule_type& rule) {
  if (const auto* s = std::get_if<scalar_system>(&rule)) return s->size();
  return std::get<kofn_rule>(rule).n;
}

}  // namespace

chamber::chamber(rule_type rule, std::vector<std::string> voters)
    : rule_(std::move(rule)), voters_(std::move(voters)) {
  if (const auto* r = std::get_if<kofn_rule>(&rule_); r && r->k > r->n)
    throw domain_error("k-out-of-n chamber with k = " + std::to_string(r->k) + " > n = " +
                       std::to_string(r->n));
  if (voters_.size() != rule_size(rule_))
    throw domain_error("chamber lists " + std::to_string(voters_.size()) +
                       " voters but its rule covers " + std::to_string(rule_size(rule_)));
}

std::optional<kofn_rule> chamber::as_kofn() const {
  if (const auto* r = std::get_if<kofn_rule>(&rule_)) return *r;
  const auto& s = std::get<scalar_system>(rule_);
  const auto w = s.weights().front();
  if (!std::all_of(s.weights().begin(), s.weights().end(), [&](auto x) { return x == w; }))
    return std::nullopt;
  return kofn_rule{static_cast<std::size_t>((s.quota() + w - 1) / w), s.size()};
}

std::optional<scalar_system> chamber::as_scalar() const {
  if (const auto* s = std::get_if<scalar_system>(&rule_)) return *s;
  const auto& r = std::get<kofn_rule>(rule_);
  if (r.k == 0) return std::nullopt;
  return scalar_system(static_cast<std::int64_t>(r.k), std::vector<std::int64_t>(r.n, 1));
}

bool chamber::wins(std::uint64_t local_coalition) const {
  if (const auto* s = std::get_if<scalar_system>(&rule_)) return s->wins(local_coalition);
  const auto& r = std::get<kofn_rule>(rule_);
  const std::uint64_t mask = r.n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r.n) - 1;
  return static_cast<std::size_t>(std::popcount(local_coalition & mask)) >= r.k;
}

std::vector<std::vector<std::size_t>> chamber::symmetric_blocks() const {
  std::vector<std::vector<std::size_t>> blocks;
  if (size() == 0) return blocks;
  if (is_kofn()) {
    blocks.emplace_back(size());
    std::iota(blocks.back().begin(), blocks.back().end(), 0);
    return blocks;
  }
  const auto& w = std::get<scalar_system>(rule_).weights();
  std::map<std::int64_t, std::size_t> block_of_weight;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto [it, fresh] = block_of_weight.try_emplace(w[i], blocks.size());
    if (fresh) blocks.emplace_back();
    blocks[it->second].push_back(i);
  }
  return blocks;
}

// ---------------------------------------------------------------------------
// chamber_system

chamber_system::chamber_system(std::string name, std::vector<chamber> chambers)
    : name_(std::move(name)), chambers_(std::move(chambers)) {
  if (chambers_.empty()) throw domain_error("a voting system needs at least one chamber");
  std::set<std::string> seen;
  for (const auto& c : chambers_) {
    offsets_.push_back(voter_count_);
    voter_count_ += c.size();
    for (const auto& v : c.voters())
      if (!seen.insert(v).second) throw domain_error("duplicate voter label '" + v + "'");
  }
}

chamber_system chamber_system::single(scalar_system sys, std::vector<std::string> labels,
                                      std::string name) {
  if (labels.empty())
    for (std::size_t i = 0; i < sys.size(); ++i) labels.push_back("X" + std::to_string(i + 1));
  std::vector<chamber> chambers;
  chambers.emplace_back(std::move(sys), std::move(labels));
  return chamber_system(std::move(name), std::move(chambers));
}

std::pair<std::size_t, std::size_t> chamber_system::locate(std::size_t voter) const {
  if (voter >= voter_count_) throw domain_error("voter index out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), voter);
  // Empty chambers share an offset with their successor; step back past them.
  std::size_t c = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  while (chambers_[c].size() == 0) --c;
  return {c, voter - offsets_[c]};
}

const std::string& chamber_system::label(std::size_t voter) const {
  auto [c, local] = locate(voter);
  return chambers_[c].voters()[local];
}

std::vector<std::string> chamber_system::labels() const {
  std::vector<std::string> out;
  for (const auto& c : chambers_) out.insert(out.end(), c.voters().begin(), c.voters().end());
  return out;
}

bool chamber_system::wins(std::uint64_t coalition) const {
  if (voter_count_ > 64) throw resource_error("bitmask evaluation needs at most 64 voters");
  for (std::size_t i = 0; i < chambers_.size(); ++i) {
    const auto local = offsets_[i] >= 64 ? 0 : coalition >> offsets_[i];
    if (!chambers_[i].wins(local)) return false;
  }
  return true;
}

evaluator chamber_system::as_evaluator() const {
  return [this](const truth_assignment& x) { return wins(x.bits()); };
}

// ---------------------------------------------------------------------------
// MWC / MLC enumeration

namespace {

bool canonical_less(const product& a, const product& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct mwc_search {
  const scalar_system& sys;
  std::size_t cap;
  std::vector<std::size_t> order;     // voters by decreasing weight
  std::vector<std::int64_t> suffix;   // suffix[i] = weight of order[i..]
  std::vector<std::size_t> chosen;
  std::vector<std::vector<std::size_t>> found;

  void run(std::size_t pos, std::int64_t sum) {
    if (sum >= sys.quota()) {
      // The last voter added is the lightest member; the set is minimal iff
      // dropping it loses.
      if (sum - sys.weights()[chosen.back()] < sys.quota()) {
        if (found.size() >= cap)
          throw resource_error("more than " + std::to_string(cap) +
                               " minimal winning coalitions; use the symmetric or "
                               "subset-sum routes instead");
        found.push_back(chosen);
      }
      return;
    }
    if (pos == order.size() || sum + suffix[pos] < sys.quota()) return;
    chosen.push_back(order[pos]);
    run(pos + 1, sum + sys.weights()[order[pos]]);
    chosen.pop_back();
    run(pos + 1, sum);
  }
};

sop_form coalitions_to_sop(std::size_t n, const std::vector<std::vector<std::size_t>>& sets,
                           polarity pol) {
  std::vector<product> products;
  products.reserve(sets.size());
  for (const auto& s : sets) {
    std::vector<literal> lits;
    for (auto v : s) lits.push_back({v, pol});
    products.emplace_back(std::move(lits));
  }
  std::sort(products.begin(), products.end(), canonical_less);
  return sop_form(n, std::move(products));
}

std::vector<std::vector<std::size_t>> enumerate_mwcs(const scalar_system& sys, std::size_t cap) {
  mwc_search search{sys, cap, {}, {}, {}, {}};
  search.order.resize(sys.size());
  std::iota(search.order.begin(), search.order.end(), 0);
  std::stable_sort(search.order.begin(), search.order.end(), [&](std::size_t a, std::size_t b) {
    return sys.weights()[a] > sys.weights()[b];
  });
  search.suffix.assign(sys.size() + 1, 0);
  for (std::size_t i = sys.size(); i-- > 0;)
    search.suffix[i] = search.suffix[i + 1] + sys.weights()[search.order[i]];
  search.run(0, 0);
  return std::move(search.found);
}

}  // namespace

sop_form build_mwc_sop(const scalar_system& sys, std::size_t cap) {
  return coalitions_to_sop(sys.size(), enumerate_mwcs(sys, cap), polarity::positive);
}

sop_form build_mlc_sop(const scalar_system& sys, std::size_t cap) {
  // A set of absent voters makes the motion fail iff the absent weight
  // exceeds sum W - T, i.e. iff it wins in the dual system.
  return coalitions_to_sop(sys.size(), enumerate_mwcs(sys.dual(), cap), polarity::negative);
}

sop_form chamber_mwc_sop(const chamber& c, std::size_t cap) {
  if (auto s = c.as_scalar()) return build_mwc_sop(*s, cap);
  return sop_form::constant_one(c.size());
}

sop_form chamber_mlc_sop(const chamber& c, std::size_t cap) {
  if (auto s = c.as_scalar()) return build_mlc_sop(*s, cap);
  return sop_form::constant_zero(c.size());
}

// ---------------------------------------------------------------------------
// Decision function

bool factored_function::evaluate(std::uint64_t coalition) const {
  for (const auto& f : factors) {
    std::uint64_t local = 0;
    for (std::size_t i = 0; i < f.vars.size(); ++i)
      if ((coalition >> f.vars[i]) & 1u) local |= std::uint64_t{1} << i;
    const bool value = std::visit([&](const auto& fn) { return fn.evaluate(local); }, f.function);
    if (!value) return false;
  }
  return true;
}

factored_function decision_function(const chamber_system& sys, std::size_t cap) {
  factored_function out;
  out.n = sys.voter_count();
  for (std::size_t i = 0; i < sys.chambers().size(); ++i) {
    const auto& c = sys.chambers()[i];
    chamber_factor factor{sop_form::constant_one(0), {}};
    factor.vars.resize(c.size());
    std::iota(factor.vars.begin(), factor.vars.end(), sys.offset(i));
    if (const auto* r = std::get_if<kofn_rule>(&c.rule()))
      factor.function = kofn_success(r->k, r->n);
    else
      factor.function = chamber_mwc_sop(c, cap);
    out.factors.push_back(std::move(factor));
  }
  return out;
}

namespace {

product shift(const product& p, std::size_t offset) {
  std::vector<literal> lits;
  for (const auto& l : p.literals()) lits.push_back({l.var + offset, l.pol});
  return product(std::move(lits));
}

}  // namespace

sop_form materialize(const chamber_system& sys, std::size_t cap) {
  std::vector<product> acc{product{}};
  for (std::size_t i = 0; i < sys.chambers().size(); ++i) {
    sop_form local = chamber_mwc_sop(sys.chambers()[i], cap);
    if (acc.size() * std::max<std::size_t>(local.size(), 1) > cap)
      throw resource_error("system has more than " + std::to_string(cap) +
                           " minimal winning coalitions");
    std::vector<product> next;
    for (const auto& a : acc)
      for (const auto& p : local.products()) next.push_back(*a.conjoin(shift(p, sys.offset(i))));
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end(), canonical_less);
  return sop_form(sys.voter_count(), std::move(acc));
}

sop_form materialize_complement(const chamber_system& sys, std::size_t cap) {
  std::vector<product> all;
  for (std::size_t i = 0; i < sys.chambers().size(); ++i) {
    sop_form local = chamber_mlc_sop(sys.chambers()[i], cap);
    if (all.size() + local.size() > cap)
      throw resource_error("system has more than " + std::to_string(cap) +
                           " maximal losing coalitions");
    for (const auto& p : local.products()) all.push_back(shift(p, sys.offset(i)));
  }
  std::sort(all.begin(), all.end(), canonical_less);
  return sop_form(sys.voter_count(), std::move(all));
}

scalar_system veto_equivalent_scalar(std::size_t vetoers, std::size_t k, std::size_t n) {
  if (k > n)
    throw domain_error("veto_equivalent_scalar: k = " + std::to_string(k) + " exceeds n = " +
                       std::to_string(n));
  if (vetoers == 0 && k == 0)
    throw domain_error("veto_equivalent_scalar: no vetoers and k = 0 is the always-true system");
  const auto w = static_cast<std::int64_t>(n - k + 1);
  std::vector<std::int64_t> weights(vetoers, w);
  weights.resize(vetoers + n, 1);
  return scalar_system(static_cast<std::int64_t>(vetoers) * w + static_cast<std::int64_t>(k),
                       std::move(weights));
}

}  // namespace banzhaf
