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

#include "banzhaf/report.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include <json.hpp>

namespace banzhaf {

namespace {

using json = nlohmann::ordered_json;

bool wants_scientific(const power_report& p) {
  return std::any_of(p.voters.begin(), p.voters.end(), [](const voter_power& v) {
    return v.tbp.str().size() > scientific_threshold_digits;
  });
}

std::vector<std::string> members(const full_report& r, std::uint64_t mask) {
  std::vector<std::string> out;
  for (; mask; mask &= mask - 1) out.push_back(r.labels[std::countr_zero(mask)]);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string swap_line(const full_report& r) {
  if (r.swap->robust) return "swap robust: yes";
  const auto& w = *r.swap->witness;
  return "swap robust: no ({" + join(members(r, w.first), ",") + "} and {" +
         join(members(r, w.second), ",") + "}, exchange " + r.labels[w.a] + " <-> " +
         r.labels[w.b] + ")";
}

}  // namespace

full_report make_report_shell(const chamber_system& sys) {
  full_report r;
  r.system_name = sys.name();
  r.labels = sys.labels();
  for (std::size_t v = 0; v < sys.voter_count(); ++v) r.chamber_of.push_back(sys.locate(v).first);
  return r;
}

std::string render_table(const full_report& r, const index_selection& sel, int digits) {
  std::vector<std::string> header{"voter", "chamber"};
  const bool show_tbp = r.power && sel.needs_tbp();
  const bool sci = show_tbp && wants_scientific(*r.power);
  if (show_tbp && sel.tbp) {
    if (sci) header.push_back("tbp~");
    header.push_back("tbp");
  }
  if (show_tbp && sel.ntbp) {
    header.push_back("ntbp");
    // Exact fractions of huge counts stay in the JSON output only.
    if (!sci) header.push_back("ntbp_exact");
  }
  if (show_tbp) header.push_back("dummy");
  if (r.pgi && sel.pgi) header.push_back("pgi");
  if (r.pgi && sel.cpgi) header.push_back("cpgi");

  std::vector<std::vector<std::string>> rows{header};
  for (std::size_t v = 0; v < r.labels.size(); ++v) {
    std::vector<std::string> row{r.labels[v], std::to_string(r.chamber_of[v] + 1)};
    if (show_tbp) {
      const auto& p = r.power->voters[v];
      if (sel.tbp) {
        if (sci) row.push_back(format_scientific(p.tbp, digits));
        row.push_back(p.tbp.str());
      }
      if (sel.ntbp) {
        row.push_back(format_significant(p.ntbp, digits));
        if (!sci) row.push_back(format_rational(p.ntbp));
      }
      row.push_back(p.dummy ? "yes" : "no");
    }
    if (r.pgi && sel.pgi) row.push_back(std::to_string(r.pgi->pgi[v]));
    if (r.pgi && sel.cpgi) row.push_back(std::to_string(r.pgi->cpgi[v]));
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  out << "system: " << (r.system_name.empty() ? "(unnamed)" : r.system_name) << "\n";
  if (r.power) out << "method: " << to_string(r.power->used) << "\n";
  if (r.check)
    out << "check: " << to_string(r.check->route) << (r.check->agrees ? " agrees" : " DISAGREES")
        << "\n";
  if (r.power)
    for (const auto& w : r.power->warnings) out << "warning: " << w << "\n";
  out << "\n";
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      // Labels left-aligned, numbers right-aligned.
      const std::string pad(width[c] - row[c].size(), ' ');
      line += c == 0 ? row[c] + pad : pad + row[c];
      if (c + 1 < row.size()) line += "  ";
    }
    out << line << "\n";
  }
  if (show_tbp) {
    out << "\ntotal tbp: " << r.power->total_tbp.str();
    if (sci) out << " (" << format_scientific(r.power->total_tbp, digits) << ")";
    out << "\n";
  }
  if (r.swap) out << (show_tbp ? "" : "\n") << swap_line(r) << "\n";
  return out.str();
}

std::string render_json(const full_report& r, const index_selection& sel, int digits) {
  json doc;
  doc["system"] = r.system_name;
  if (r.power) doc["method"] = to_string(r.power->used);
  json voters = json::array();
  for (std::size_t v = 0; v < r.labels.size(); ++v) {
    json jv;
    jv["label"] = r.labels[v];
    jv["chamber"] = r.chamber_of[v] + 1;
    if (r.power && sel.needs_tbp()) {
      const auto& p = r.power->voters[v];
      if (sel.tbp) {
        jv["tbp"] = p.tbp.str();
        jv["tbp_sci"] = format_scientific(p.tbp, digits);
      }
      if (sel.ntbp) {
        jv["ntbp"] = format_rational(p.ntbp);
        jv["ntbp_decimal"] = format_significant(p.ntbp, digits);
      }
      jv["dummy"] = p.dummy;
    }
    if (r.pgi && sel.pgi) jv["pgi"] = r.pgi->pgi[v];
    if (r.pgi && sel.cpgi) jv["cpgi"] = r.pgi->cpgi[v];
    voters.push_back(std::move(jv));
  }
  doc["voters"] = std::move(voters);
  if (r.power && sel.needs_tbp()) {
    doc["total_tbp"] = r.power->total_tbp.str();
    doc["warnings"] = r.power->warnings;
  }
  if (r.check) doc["check"] = {{"method", to_string(r.check->route)}, {"agrees", r.check->agrees}};
  if (r.swap) {
    json js;
    js["robust"] = r.swap->robust;
    if (r.swap->witness) {
      const auto& w = *r.swap->witness;
      js["witness"] = {{"first", members(r, w.first)},
                       {"second", members(r, w.second)},
                       {"exchange", {r.labels[w.a], r.labels[w.b]}}};
    }
    doc["swap_robust"] = std::move(js);
  }
  return doc.dump(2) + "\n";
}

}  // namespace banzhaf
