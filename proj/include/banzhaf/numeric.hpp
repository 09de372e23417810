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

#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace banzhaf {

using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

/// 2^e as an exact integer.
inline big_int pow2(std::size_t e) {
  big_int r = 1;
  r <<= e;
  return r;
}

/// Exact decimal rendering with `digits` significant digits, rounding half
/// away from zero. Values below 1e-4 or at/above 1e+15 switch to scientific
/// notation. Zero renders as "0".
std::string format_significant(const rational& value, int digits);

/// Scientific rendering "d.ddde+XX" with `digits` significant digits
/// (rounded half up), e.g. 2.238e+159. Works on exact integers of any size.
std::string format_scientific(const big_int& value, int digits);

/// Fixed-point rendering with `places` decimals (half up), e.g. 2.259.
std::string format_fixed(const rational& value, int places);

/// "p/q" with q omitted when it is 1.
std::string format_rational(const rational& value);

/// Inverse of format_rational. Throws domain_error on malformed input.
rational parse_rational(const std::string& text);

}  // namespace banzhaf
