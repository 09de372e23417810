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

/// @file report.hpp
/// Rendering of power reports as aligned text tables and as JSON. JSON
/// carries every big integer and rational as a string so that the numbers
/// survive a round trip exactly.

#pragma once

#include <optional>
#include <string>

#include "banzhaf/power.hpp"
#include "banzhaf/voting.hpp"

namespace banzhaf {

struct index_selection {
  bool tbp = true;
  bool ntbp = true;
  bool pgi = false;
  bool cpgi = false;

  bool needs_tbp() const noexcept { return tbp || ntbp; }
  bool needs_pgi() const noexcept { return pgi || cpgi; }
};

struct cross_check {
  method route = method::oracle;
  bool agrees = true;
};

/// Everything the CLI prints for one system.
struct full_report {
  std::string system_name;
  std::vector<std::string> labels;
  std::vector<std::size_t> chamber_of;
  std::optional<power_report> power;
  std::optional<pgi_counts> pgi;
  std::optional<cross_check> check;
  std::optional<swap_result> swap;
};

full_report make_report_shell(const chamber_system& sys);

/// Significant digits for decimal and scientific renderings.
std::string render_table(const full_report& r, const index_selection& sel, int digits);
std::string render_json(const full_report& r, const index_selection& sel, int digits);

/// Exact TBP values above this many decimal digits also get a scientific column.
inline constexpr std::size_t scientific_threshold_digits = 15;

}  // namespace banzhaf
