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

#include "banzhaf/sop.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "banzhaf/errors.hpp"

namespace banzhaf {

// ---------------------------------------------------------------------------
// product

product::product(std::vector<literal> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end(), [](const literal& a, const literal& b) {
    return a.var < b.var || (a.var == b.var && a.pol < b.pol);
  });
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
  for (std::size_t i = 1; i < lits_.size(); ++i) {
    if (lits_[i].var == lits_[i - 1].var)
      throw domain_error("product: variable X" + std::to_string(lits_[i].var + 1) +
                         " appears with both polarities");
  }
}

std::optional<polarity> product::polarity_of(std::size_t var) const {
  auto it = std::lower_bound(lits_.begin(), lits_.end(), var,
                             [](const literal& l, std::size_t v) { return l.var < v; });
  if (it == lits_.end() || it->var != var) return std::nullopt;
  return it->pol;
}

bool product::opposes(const product& other) const {
  auto a = lits_.begin();
  auto b = other.lits_.begin();
  while (a != lits_.end() && b != other.lits_.end()) {
    if (a->var < b->var) {
      ++a;
    } else if (b->var < a->var) {
      ++b;
    } else {
      if (a->pol != b->pol) return true;
      ++a;
      ++b;
    }
  }
  return false;
}

std::optional<product> product::conjoin(const product& other) const {
  product out;
  out.lits_.reserve(lits_.size() + other.lits_.size());
  auto a = lits_.begin();
  auto b = other.lits_.begin();
  while (a != lits_.end() || b != other.lits_.end()) {
    if (b == other.lits_.end() || (a != lits_.end() && a->var < b->var)) {
      out.lits_.push_back(*a++);
    } else if (a == lits_.end() || b->var < a->var) {
      out.lits_.push_back(*b++);
    } else {
      if (a->pol != b->pol) return std::nullopt;
      out.lits_.push_back(*a);
      ++a;
      ++b;
    }
  }
  return out;
}

bool product::evaluate(std::uint64_t assignment) const {
  for (const auto& l : lits_) {
    bool bit = (assignment >> l.var) & 1u;
    if (bit != l.value()) return false;
  }
  return true;
}

bool product::evaluate(std::span<const bool> assignment) const {
  for (const auto& l : lits_) {
    if (assignment[l.var] != l.value()) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const product& a, const product& b) {
  auto key = [](const literal& l) { return std::pair(l.var, static_cast<int>(l.pol)); };
  return std::lexicographical_compare_three_way(
      a.lits_.begin(), a.lits_.end(), b.lits_.begin(), b.lits_.end(),
      [&](const literal& x, const literal& y) { return key(x) <=> key(y); });
}

// ---------------------------------------------------------------------------
// sop_form

sop_form::sop_form(std::size_t n, std::vector<product> products)
    : n_(n), products_(std::move(products)) {
  for (const auto& p : products_) {
    if (p.max_var_plus_one() > n_)
      throw domain_error("sop_form: product " + to_string(p) + " uses a variable outside X1..X" +
                         std::to_string(n_));
  }
}

sop_form assume_disjoint(sop_form f) {
  f.disjoint_ = true;
  return f;
}

sop_form sop_form::certified(std::size_t n, std::vector<product> products) {
  sop_form f(n, std::move(products));
  if (!f.pairwise_disjoint())
    throw contract_error("sop_form::certified: products are not pairwise disjoint");
  return assume_disjoint(std::move(f));
}

bool sop_form::pairwise_disjoint() const {
  for (std::size_t i = 0; i < products_.size(); ++i)
    for (std::size_t j = i + 1; j < products_.size(); ++j)
      if (!products_[i].opposes(products_[j])) return false;
  return true;
}

bool sop_form::evaluate(std::uint64_t assignment) const {
  return std::any_of(products_.begin(), products_.end(),
                     [&](const product& p) { return p.evaluate(assignment); });
}

bool sop_form::evaluate(std::span<const bool> assignment) const {
  if (assignment.size() != n_) throw domain_error("sop_form::evaluate: assignment length mismatch");
  return std::any_of(products_.begin(), products_.end(),
                     [&](const product& p) { return p.evaluate(assignment); });
}

// ---------------------------------------------------------------------------
// Restriction and conjunction

sop_form restrict(const sop_form& f, std::size_t var, bool value) {
  if (var >= f.n())
    throw domain_error("restrict: variable X" + std::to_string(var + 1) + " outside X1..X" +
                       std::to_string(f.n()));
  std::vector<product> out;
  out.reserve(f.size());
  for (const auto& p : f.products()) {
    auto pol = p.polarity_of(var);
    if (!pol) {
      out.push_back(p);
      continue;
    }
    if ((*pol == polarity::positive) != value) continue;
    std::vector<literal> rest;
    rest.reserve(p.size() - 1);
    for (const auto& l : p.literals())
      if (l.var != var) rest.push_back(l);
    out.emplace_back(std::move(rest));
  }
  sop_form r(f.n(), std::move(out));
  return f.disjoint_certified() ? assume_disjoint(std::move(r)) : r;
}

sop_form conjoin(const sop_form& f, literal lit) {
  if (lit.var >= f.n()) throw domain_error("conjoin: literal outside the universe");
  product single({lit});
  std::vector<product> out;
  for (const auto& p : f.products())
    if (auto c = p.conjoin(single)) out.push_back(std::move(*c));
  sop_form r(f.n(), std::move(out));
  return f.disjoint_certified() ? assume_disjoint(std::move(r)) : r;
}

sop_form conjoin(const sop_form& f, const sop_form& g) {
  if (f.n() != g.n()) throw domain_error("conjoin: universe size mismatch");
  std::vector<product> out;
  for (const auto& p : f.products())
    for (const auto& q : g.products())
      if (auto c = p.conjoin(q)) out.push_back(std::move(*c));
  sop_form r(f.n(), std::move(out));
  // Two pieces (p,q), (p',q') differ in p or q; that factor's opposition survives.
  return f.disjoint_certified() && g.disjoint_certified() ? assume_disjoint(std::move(r)) : r;
}

sop_form lift(const sop_form& f, std::size_t new_n) {
  if (new_n < f.n()) throw domain_error("lift: cannot shrink the universe");
  sop_form r(new_n, std::vector<product>(f.products().begin(), f.products().end()));
  return f.disjoint_certified() ? assume_disjoint(std::move(r)) : r;
}

// ---------------------------------------------------------------------------
// Disjointing

std::vector<product> sharp(const product& p, const product& q) {
  if (p.opposes(q)) return {p};
  std::vector<literal> missing;
  for (const auto& l : q.literals())
    if (!p.polarity_of(l.var)) missing.push_back(l);
  std::vector<product> pieces;
  pieces.reserve(missing.size());
  product prefix = p;
  for (const auto& l : missing) {
    pieces.push_back(*prefix.conjoin(product({~l})));
    prefix = *prefix.conjoin(product({l}));
  }
  return pieces;
}

namespace {

// Appends to `out` the pieces of p outside the union of `cover`.
void subtract_union(const product& p, std::span<const product> cover, std::vector<product>& out,
                    std::size_t max_products) {
  std::vector<product> pieces{p};
  std::vector<product> next;
  for (const auto& q : cover) {
    next.clear();
    for (const auto& piece : pieces) {
      auto split = sharp(piece, q);
      next.insert(next.end(), std::make_move_iterator(split.begin()),
                  std::make_move_iterator(split.end()));
    }
    pieces.swap(next);
    if (pieces.empty()) return;
  }
  if (out.size() + pieces.size() > max_products)
    throw resource_error("disjointing exceeds " + std::to_string(max_products) + " products");
  out.insert(out.end(), std::make_move_iterator(pieces.begin()),
             std::make_move_iterator(pieces.end()));
}

}  // namespace

std::vector<product> disjoint_difference(const sop_form& extra, const sop_form& base,
                                         std::size_t max_products) {
  if (extra.n() != base.n()) throw domain_error("disjoint_difference: universe size mismatch");
  std::vector<product> cover(base.products().begin(), base.products().end());
  std::vector<product> out;
  for (const auto& p : extra.products()) {
    subtract_union(p, cover, out, max_products);
    cover.push_back(p);
  }
  return out;
}

sop_form make_disjoint(const sop_form& f, std::size_t max_products) {
  if (f.disjoint_certified()) return f;
  std::vector<product> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    subtract_union(f.products()[i], f.products().first(i), out, max_products);
  return assume_disjoint(sop_form(f.n(), std::move(out)));
}

// ---------------------------------------------------------------------------
// Weights

big_int weight_disjoint(const sop_form& f) {
  if (!f.disjoint_certified())
    throw contract_error("weight_disjoint: form is not certified disjoint");
  big_int total = 0;
  for (const auto& p : f.products()) total += pow2(f.n() - p.size());
  return total;
}

namespace {

void ie_walk(const sop_form& f, std::size_t start, const product& acc, std::size_t depth,
             big_int& total) {
  for (std::size_t i = start; i < f.size(); ++i) {
    auto c = acc.conjoin(f.products()[i]);
    if (!c) continue;  // every superset clashes too
    big_int w = pow2(f.n() - c->size());
    if (depth % 2 == 0)
      total += w;
    else
      total -= w;
    ie_walk(f, i + 1, *c, depth + 1, total);
  }
}

}  // namespace

big_int weight_ie(const sop_form& f, std::size_t max_products) {
  if (f.size() > max_products)
    throw resource_error("weight_ie: " + std::to_string(f.size()) + " products exceed the cap of " +
                         std::to_string(max_products) + "; disjoint the form first");
  big_int total = 0;
  ie_walk(f, 0, product{}, 0, total);
  return total;
}

big_int weight(const sop_form& f) {
  return f.disjoint_certified() ? weight_disjoint(f) : weight_disjoint(make_disjoint(f));
}

big_int weight_conjunction_disjoint_vars(std::span<const sop_block> blocks) {
  std::set<std::size_t> seen;
  big_int total = 1;
  for (const auto& b : blocks) {
    if (b.vars.size() != b.form.n())
      throw domain_error("weight_conjunction_disjoint_vars: block maps " +
                         std::to_string(b.vars.size()) + " variables onto a universe of " +
                         std::to_string(b.form.n()));
    for (auto v : b.vars)
      if (!seen.insert(v).second)
        throw domain_error("weight_conjunction_disjoint_vars: variable X" + std::to_string(v + 1) +
                           " shared by two blocks");
    total *= weight(b.form);
  }
  return total;
}

big_int complement_weight(const big_int& wt_f, std::size_t n) {
  big_int full = pow2(n);
  if (wt_f < 0 || wt_f > full)
    throw domain_error("complement_weight: weight " + wt_f.str() + " outside [0, 2^" +
                       std::to_string(n) + "]");
  return full - wt_f;
}

big_int derivative_weight(const sop_form& f, std::size_t var) {
  if (var >= f.n())
    throw domain_error("derivative_weight: variable X" + std::to_string(var + 1) +
                       " outside X1..X" + std::to_string(f.n()));
  sop_form d = make_disjoint(f);
  sop_form q1 = restrict(d, var, true);
  sop_form q0 = restrict(d, var, false);
  big_int both = weight_disjoint(conjoin(q1, q0));
  // Both quotients ignore `var`, so n-universe weights count each point twice.
  big_int doubled = weight_disjoint(q1) + weight_disjoint(q0) - 2 * both;
  return doubled / 2;
}

// ---------------------------------------------------------------------------
// Unateness

unateness_result is_positive_unate(const sop_form& f) {
  for (const auto& p : f.products())
    for (const auto& l : p.literals())
      if (l.pol == polarity::negative) return {false, l.var, std::nullopt};
  return {};
}

unateness_result is_positive_unate_semantic(const sop_form& f, std::size_t max_n) {
  if (f.n() > max_n || f.n() > 63)
    throw resource_error("is_positive_unate_semantic: " + std::to_string(f.n()) +
                         " variables exceed the truth-table cap");
  const std::uint64_t rows = std::uint64_t{1} << f.n();
  std::vector<bool> table(rows);
  for (std::uint64_t x = 0; x < rows; ++x) table[x] = f.evaluate(x);
  for (std::size_t m = 0; m < f.n(); ++m) {
    const std::uint64_t bit = std::uint64_t{1} << m;
    for (std::uint64_t x = 0; x < rows; ++x) {
      if (x & bit) continue;
      if (table[x] && !table[x | bit]) return {false, m, x};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Rendering

std::string to_string(const product& p) {
  if (p.empty()) return "1";
  std::string out;
  for (const auto& l : p.literals()) {
    if (!out.empty()) out += ' ';
    if (l.pol == polarity::negative) out += '~';
    out += "X" + std::to_string(l.var + 1);
  }
  return out;
}

std::string to_string(const sop_form& f) {
  if (f.size() == 0) return "0";
  std::string out;
  for (const auto& p : f.products()) {
    if (!out.empty()) out += f.disjoint_certified() ? " ^ " : " + ";
    out += to_string(p);
  }
  return out;
}

}  // namespace banzhaf
