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

#include "banzhaf/power.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <future>
#include <numeric>
#include <utility>

#include "banzhaf/combinatorics.hpp"
#include "banzhaf/errors.hpp"
#include "banzhaf/oracle.hpp"

namespace banzhaf {

namespace {

constexpr std::array<std::pair<method, std::string_view>, 9> method_names{{
    {method::automatic, "auto"},
    {method::derivative, "derivative"},
    {method::quotient_pos, "quotient_pos"},
    {method::quotient_neg, "quotient_neg"},
    {method::quotient_diff, "quotient_diff"},
    {method::complement, "complement"},
    {method::closed_form, "closed_form"},
    {method::oracle, "oracle"},
    {method::subset_sum, "subset_sum"},
}};

bool all_kofn(const chamber_system& sys) {
  return std::all_of(sys.chambers().begin(), sys.chambers().end(),
                     [](const chamber& c) { return c.as_kofn().has_value(); });
}

std::optional<scalar_system> single_scalar(const chamber_system& sys) {
  if (sys.chambers().size() != 1) return std::nullopt;
  return sys.chambers().front().as_scalar();
}

/// One representative voter per symmetric block, with the block's members.
struct block_task {
  std::size_t representative;
  std::vector<std::size_t> members;
};

std::vector<block_task> symmetric_tasks(const chamber_system& sys) {
  std::vector<block_task> tasks;
  for (std::size_t i = 0; i < sys.chambers().size(); ++i) {
    for (auto& block : sys.chambers()[i].symmetric_blocks()) {
      block_task t{sys.offset(i) + block.front(), {}};
      for (auto local : block) t.members.push_back(sys.offset(i) + local);
      tasks.push_back(std::move(t));
    }
  }
  return tasks;
}

/// Runs `per_voter` once per symmetric block and fans the value out.
std::vector<big_int> fan_out(const chamber_system& sys, bool parallel,
                             const std::function<big_int(std::size_t)>& per_voter) {
  const auto tasks = symmetric_tasks(sys);
  std::vector<big_int> values(tasks.size());
  if (parallel && tasks.size() > 1) {
    std::vector<std::future<big_int>> futures;
    futures.reserve(tasks.size());
    for (const auto& t : tasks)
      futures.push_back(std::async(std::launch::async, per_voter, t.representative));
    for (std::size_t i = 0; i < tasks.size(); ++i) values[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < tasks.size(); ++i) values[i] = per_voter(tasks[i].representative);
  }
  std::vector<big_int> out(sys.voter_count());
  for (std::size_t i = 0; i < tasks.size(); ++i)
    for (auto v : tasks[i].members) out[v] = values[i];
  return out;
}

/// Disjointed chamber MWC forms and their weights.
struct chamber_forms {
  std::vector<sop_form> disjoint;
  std::vector<big_int> weights;

  chamber_forms(const chamber_system& sys, const compute_options& opts) {
    for (const auto& c : sys.chambers()) {
      disjoint.push_back(make_disjoint(chamber_mwc_sop(c, opts.mwc_cap), opts.disjoint_cap));
      weights.push_back(weight_disjoint(disjoint.back()));
    }
  }

  big_int others(std::size_t chamber_index) const {
    big_int r = 1;
    for (std::size_t j = 0; j < weights.size(); ++j)
      if (j != chamber_index) r *= weights[j];
    return r;
  }
};

/// wt((g/X_v) X_v) or wt((g/~X_v) ~X_v) for a certified disjoint g.
big_int quotient_term(const sop_form& g, std::size_t var, bool value) {
  return weight_disjoint(conjoin(restrict(g, var, value), literal{var, value ? polarity::positive
                                                                            : polarity::negative}));
}

std::vector<big_int> sop_route(const chamber_system& sys, method m, const compute_options& opts) {
  const chamber_forms forms(sys, opts);
  const big_int total = std::accumulate(forms.weights.begin(), forms.weights.end(), big_int{1},
                                        std::multiplies<>());
  return fan_out(sys, opts.parallel, [&](std::size_t voter) -> big_int {
    const auto [c, local] = sys.locate(voter);
    const sop_form& g = forms.disjoint[c];
    const big_int rest = forms.others(c);
    switch (m) {
      case method::derivative:
        return derivative_weight(g, local) * rest;
      case method::quotient_pos:
        return 2 * quotient_term(g, local, true) * rest - total;
      case method::quotient_neg:
        return total - 2 * quotient_term(g, local, false) * rest;
      case method::quotient_diff:
        return (quotient_term(g, local, true) - quotient_term(g, local, false)) * rest;
      default:
        throw contract_error("sop_route: not an SOP method");
    }
  });
}

std::vector<big_int> complement_route(const chamber_system& sys, const compute_options& opts) {
  const sop_form fbar = make_disjoint(materialize_complement(sys, opts.mwc_cap), opts.disjoint_cap);
  const big_int total = weight_disjoint(fbar);
  return fan_out(sys, opts.parallel, [&](std::size_t voter) -> big_int {
    return total - 2 * quotient_term(fbar, voter, true);
  });
}

std::vector<big_int> closed_form_route(const chamber_system& sys) {
  if (!all_kofn(sys))
    throw unsupported_method_error(
        "closed_form needs every chamber to be k-out-of-n (or equal-weight)");
  std::vector<big_int> out(sys.voter_count());
  for (std::size_t i = 0; i < sys.chambers().size(); ++i) {
    const big_int v = chamber_closed_form_tbp(sys, i);
    for (std::size_t l = 0; l < sys.chambers()[i].size(); ++l) out[sys.offset(i) + l] = v;
  }
  return out;
}

std::vector<big_int> oracle_route(const chamber_system& sys, const compute_options& opts) {
  const auto counts = oracle_tbp_all(sys.as_evaluator(), sys.voter_count(), opts.oracle_cap);
  return {counts.begin(), counts.end()};
}

std::vector<big_int> subset_sum_route(const chamber_system& sys, const compute_options& opts) {
  auto s = single_scalar(sys);
  if (!s) throw unsupported_method_error("subset_sum needs a single weighted chamber");
  return subset_sum_tbp(*s, opts.subset_sum_cap);
}

std::pair<std::vector<big_int>, method> resolve(const chamber_system& sys, method m,
                                                const compute_options& opts) {
  switch (m) {
    case method::derivative:
    case method::quotient_pos:
    case method::quotient_neg:
    case method::quotient_diff:
      return {sop_route(sys, m, opts), m};
    case method::complement:
      return {complement_route(sys, opts), m};
    case method::closed_form:
      return {closed_form_route(sys), m};
    case method::oracle:
      return {oracle_route(sys, opts), m};
    case method::subset_sum:
      return {subset_sum_route(sys, opts), m};
    case method::automatic:
      break;
  }
  if (all_kofn(sys)) return {closed_form_route(sys), method::closed_form};
  try {
    return {sop_route(sys, method::quotient_pos, opts), method::quotient_pos};
  } catch (const resource_error&) {
    if (auto s = single_scalar(sys); s && s->total_weight() <= opts.subset_sum_cap)
      return {subset_sum_tbp(*s, opts.subset_sum_cap), method::subset_sum};
    if (sys.voter_count() <= std::min(opts.oracle_cap, max_oracle_cap))
      return {oracle_route(sys, opts), method::oracle};
    throw;
  }
}

template <typename Count>
std::vector<big_int> subset_sum_counts(const scalar_system& sys) {
  const auto total = static_cast<std::size_t>(sys.total_weight());
  const auto quota = static_cast<std::size_t>(sys.quota());
  std::vector<Count> all(total + 1, Count{0});
  all[0] = 1;
  std::size_t reach = 0;
  for (auto w64 : sys.weights()) {
    const auto w = static_cast<std::size_t>(w64);
    reach += w;
    for (std::size_t s = reach; s >= w; --s) all[s] += all[s - w];
  }

  std::vector<big_int> out(sys.size());
  std::vector<Count> without(total + 1);
  std::vector<std::optional<big_int>> by_weight;  // memo keyed by weight rank
  std::vector<std::int64_t> seen;
  for (std::size_t m = 0; m < sys.size(); ++m) {
    const auto w = static_cast<std::size_t>(sys.weights()[m]);
    auto it = std::find(seen.begin(), seen.end(), sys.weights()[m]);
    if (it != seen.end()) {
      out[m] = *by_weight[static_cast<std::size_t>(it - seen.begin())];
      continue;
    }
    // Remove voter m from the generating polynomial.
    for (std::size_t s = 0; s <= total; ++s) without[s] = all[s] - (s >= w ? without[s - w] : Count{0});
    Count swings{0};
    for (std::size_t s = quota > w ? quota - w : 0; s < quota; ++s) swings += without[s];
    out[m] = big_int(swings);
    seen.push_back(sys.weights()[m]);
    by_weight.emplace_back(out[m]);
  }
  return out;
}

}  // namespace

std::string to_string(method m) {
  for (const auto& [value, name] : method_names)
    if (value == m) return std::string(name);
  return "unknown";
}

std::optional<method> parse_method(std::string_view name) {
  for (const auto& [value, text] : method_names)
    if (text == name) return value;
  if (name == "automatic") return method::automatic;
  return std::nullopt;
}

big_int chamber_closed_form_tbp(const chamber_system& sys, std::size_t chamber_index) {
  if (chamber_index >= sys.chambers().size())
    throw domain_error("chamber index " + std::to_string(chamber_index) + " out of range");
  big_int r = 1;
  for (std::size_t j = 0; j < sys.chambers().size(); ++j) {
    auto rule = sys.chambers()[j].as_kofn();
    if (!rule)
      throw unsupported_method_error("closed_form: chamber " + std::to_string(j + 1) +
                                     " is not k-out-of-n");
    const auto k = static_cast<std::int64_t>(rule->k);
    if (j == chamber_index) {
      if (rule->n == 0) return 0;
      r *= binom(rule->n - 1, k - 1);
    } else {
      r *= cum_binom(rule->n, k);
    }
  }
  return r;
}

std::vector<big_int> subset_sum_tbp(const scalar_system& sys, std::int64_t max_total) {
  if (sys.total_weight() > max_total)
    throw resource_error("subset_sum: total weight " + std::to_string(sys.total_weight()) +
                         " exceeds the cap of " + std::to_string(max_total));
  // Subset counts stay below 2^n, so 64-bit counters are exact for n < 64.
  if (sys.size() < 64) return subset_sum_counts<std::uint64_t>(sys);
  return subset_sum_counts<big_int>(sys);
}

std::vector<big_int> tbp_vector(const chamber_system& sys, method m, const compute_options& opts) {
  return resolve(sys, m, opts).first;
}

power_report tbp_report(const chamber_system& sys, method m, const compute_options& opts) {
  auto [tbp, used] = resolve(sys, m, opts);
  power_report report;
  report.system_name = sys.name();
  report.used = used;
  report.total_tbp = std::accumulate(tbp.begin(), tbp.end(), big_int{0});
  for (std::size_t v = 0; v < tbp.size(); ++v) {
    voter_power p;
    p.label = sys.label(v);
    p.chamber = sys.locate(v).first;
    p.ntbp = report.total_tbp == 0 ? rational(0) : rational(tbp[v], report.total_tbp);
    p.dummy = tbp[v] == 0;
    p.tbp = std::move(tbp[v]);
    report.voters.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < sys.chambers().size(); ++i) {
    const auto s = sys.chambers()[i].as_scalar();
    if (s && !s->prudent())
      report.warnings.push_back("chamber " + std::to_string(i + 1) + ": quota " +
                                std::to_string(s->quota()) + " is not above half of total weight " +
                                std::to_string(s->total_weight()) + " (imprudent)");
  }
  return report;
}

big_int decision_weight(const chamber_system& sys, const compute_options& opts) {
  big_int symmetric_part = 1;
  std::vector<sop_block> blocks;
  for (std::size_t i = 0; i < sys.chambers().size(); ++i) {
    const auto& c = sys.chambers()[i];
    if (auto r = c.as_kofn()) {
      symmetric_part *= cum_binom(r->n, static_cast<std::int64_t>(r->k));
      continue;
    }
    std::vector<std::size_t> vars(c.size());
    std::iota(vars.begin(), vars.end(), sys.offset(i));
    blocks.push_back({make_disjoint(chamber_mwc_sop(c, opts.mwc_cap), opts.disjoint_cap), vars});
  }
  return symmetric_part * weight_conjunction_disjoint_vars(blocks);
}

big_int complement_decision_weight(const chamber_system& sys, const compute_options& opts) {
  return weight_disjoint(
      make_disjoint(materialize_complement(sys, opts.mwc_cap), opts.disjoint_cap));
}

pgi_counts pgi_cpgi(const chamber_system& sys, const compute_options& opts) {
  pgi_counts out;
  out.pgi.assign(sys.voter_count(), 0);
  out.cpgi.assign(sys.voter_count(), 0);
  const sop_form mwc = materialize(sys, opts.mwc_cap);
  const sop_form mlc = materialize_complement(sys, opts.mwc_cap);
  for (const auto& p : mwc.products())
    for (const auto& l : p.literals())
      if (l.pol == polarity::positive) ++out.pgi[l.var];
  for (const auto& p : mlc.products())
    for (const auto& l : p.literals())
      if (l.pol == polarity::negative) ++out.cpgi[l.var];
  return out;
}

swap_result swap_robust_check(const chamber_system& sys, const compute_options& opts) {
  const std::size_t cap = std::min(opts.oracle_cap, max_oracle_cap);
  if (sys.voter_count() > cap)
    throw resource_error("swap check: " + std::to_string(sys.voter_count()) +
                         " voters exceed the oracle cap of " + std::to_string(cap));
  const sop_form mwc_form = materialize(sys, opts.mwc_cap);
  std::vector<std::uint64_t> mwcs;
  for (const auto& p : mwc_form.products()) {
    std::uint64_t mask = 0;
    for (const auto& l : p.literals()) mask |= std::uint64_t{1} << l.var;
    mwcs.push_back(mask);
  }
  // If C1, C2 violate with (a, b), every winning subset of C1 contains a and
  // every winning subset of C2 contains b, so minimal ones violate too.
  for (std::size_t i = 0; i < mwcs.size(); ++i) {
    for (std::size_t j = i + 1; j < mwcs.size(); ++j) {
      const std::uint64_t only_first = mwcs[i] & ~mwcs[j];
      const std::uint64_t only_second = mwcs[j] & ~mwcs[i];
      for (std::uint64_t ra = only_first; ra; ra &= ra - 1) {
        const std::uint64_t a = ra & -ra;
        for (std::uint64_t rb = only_second; rb; rb &= rb - 1) {
          const std::uint64_t b = rb & -rb;
          if (!sys.wins(mwcs[i] ^ a ^ b) && !sys.wins(mwcs[j] ^ a ^ b))
            return {false, swap_witness{mwcs[i], mwcs[j],
                                        static_cast<std::size_t>(std::countr_zero(a)),
                                        static_cast<std::size_t>(std::countr_zero(b))}};
        }
      }
    }
  }
  return {};
}

}  // namespace banzhaf
