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

#include "cli.hpp"

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "banzhaf/errors.hpp"
#include "banzhaf/power.hpp"
#include "banzhaf/report.hpp"
#include "banzhaf/spec_io.hpp"

namespace banzhaf::cli {

namespace {

struct arguments {
  std::string system;
  std::vector<std::string> index{"tbp", "ntbp"};
  std::string method_name;
  std::string check_name;
  bool swap = false;
  std::string format = "table";
  int digits = 0;
  int oracle_cap = -1;
};

index_selection parse_index(const std::vector<std::string>& names) {
  index_selection sel{false, false, false, false};
  for (const auto& n : names) {
    if (n == "tbp") sel.tbp = true;
    else if (n == "ntbp") sel.ntbp = true;
    else if (n == "pgi") sel.pgi = true;
    else if (n == "cpgi") sel.cpgi = true;
    else throw CLI::ValidationError("--index", "unknown index '" + n + "'");
  }
  return sel;
}

method require_method(const std::string& name, const std::string& flag) {
  auto m = parse_method(name);
  if (!m || *m == method::subset_sum)
    throw CLI::ValidationError(flag, "unknown method '" + name + "'");
  return *m;
}

int compute(const arguments& args, std::ostream& out, std::ostream& err) {
  const index_selection sel = parse_index(args.index);
  const system_spec spec = parse_spec(args.system);
  const chamber_system& sys = spec.system;

  compute_options opts;
  if (args.oracle_cap >= 0)
    opts.oracle_cap = static_cast<std::size_t>(args.oracle_cap);
  else if (spec.options.oracle_cap)
    opts.oracle_cap = *spec.options.oracle_cap;
  const int digits = args.digits > 0 ? args.digits : spec.options.digits.value_or(4);
  method m = spec.options.default_method.value_or(method::automatic);
  if (!args.method_name.empty()) m = require_method(args.method_name, "--method");
  std::optional<method> check;
  if (!args.check_name.empty()) check = require_method(args.check_name, "--check");

  full_report report = make_report_shell(sys);
  if (sel.needs_tbp() || check) report.power = tbp_report(sys, m, opts);
  if (check) {
    const auto second = tbp_vector(sys, *check, opts);
    bool agrees = true;
    for (std::size_t v = 0; v < second.size(); ++v)
      agrees = agrees && second[v] == report.power->voters[v].tbp;
    report.check = cross_check{*check, agrees};
  }
  if (sel.needs_pgi()) report.pgi = pgi_cpgi(sys, opts);
  if (args.swap) report.swap = swap_robust_check(sys, opts);

  out << (args.format == "json" ? render_json(report, sel, digits)
                                : render_table(report, sel, digits));
  if (report.check && !report.check->agrees) {
    err << "error: " << to_string(report.power->used) << " and " << to_string(report.check->route)
        << " disagree\n";
    return check_disagreement;
  }
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  arguments args;
  CLI::App app{"Banzhaf power of weighted and multi-chamber voting systems"};
  app.add_option("--system", args.system, "System document (JSON), or - for stdin")->required();
  app.add_option("--index", args.index, "Indices to report: tbp,ntbp,pgi,cpgi")
      ->delimiter(',');
  app.add_option("--method", args.method_name,
                 "auto|derivative|quotient_pos|quotient_neg|quotient_diff|complement|"
                 "closed_form|oracle");
  app.add_option("--check", args.check_name, "Second method; exit 6 if it disagrees");
  app.add_flag("--swap-robust", args.swap, "Search for a swap-robustness violation");
  app.add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--digits", args.digits, "Significant digits for decimals (default 4)")
      ->check(CLI::Range(1, 100));
  app.add_option("--oracle-cap", args.oracle_cap, "Largest voter count for exhaustive routes")
      ->check(CLI::Range(0, static_cast<int>(max_oracle_cap)));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return parse_failure;
  }

  try {
    return compute(args, out, err);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return parse_failure;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return parse_failure;
  } catch (const validation_error& e) {
    err << "invalid system: " << e.what() << "\n";
    return validation_failure;
  } catch (const domain_error& e) {
    err << "invalid system: " << e.what() << "\n";
    return validation_failure;
  } catch (const unsupported_method_error& e) {
    err << "unsupported method: " << e.what() << "\n";
    return unsupported_method;
  } catch (const resource_error& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return cap_exceeded;
  }
}

}  // namespace banzhaf::cli
