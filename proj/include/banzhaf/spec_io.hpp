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

/// @file spec_io.hpp
/// JSON system documents:
///
///   {
///     "name": "UNSC",
///     "chambers": [
///       {"type": "k_of_n", "voters": ["P1", ...], "k": 5},
///       {"type": "weighted", "voters": ["A", "B"], "weights": [2, 1], "quota": 2}
///     ],
///     "options": {"method": "closed_form", "digits": 3, "oracle_cap": 24}
///   }
///
/// "name" and "options" are optional. Unknown keys are rejected.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "banzhaf/power.hpp"
#include "banzhaf/voting.hpp"

namespace banzhaf {

/// Defaults carried by the document; command-line flags override them.
struct spec_options {
  std::optional<method> default_method;
  std::optional<int> digits;
  std::optional<std::size_t> oracle_cap;
};

struct system_spec {
  chamber_system system;
  spec_options options;
};

/// Throws parse_error for malformed JSON and validation_error (with a field
/// path such as "chambers[1].k") for a well-formed but invalid system.
system_spec parse_spec_text(std::string_view text);

/// Reads `path`, or standard input when path is "-". An unreadable file is a
/// parse_error.
system_spec parse_spec(const std::string& path);

/// Serializes back to the document format (two-space indented).
std::string write_spec(const system_spec& spec);

}  // namespace banzhaf
