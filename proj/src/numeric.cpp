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

#include "banzhaf/numeric.hpp"

#include <cctype>
#include <utility>

#include "banzhaf/errors.hpp"

namespace banzhaf {
namespace {

big_int pow10(int e) {
  big_int r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

rational scale10(const rational& v, int e) {
  if (e >= 0) return v * rational(pow10(e));
  return v / rational(pow10(-e));
}

// floor(v + 1/2) for v >= 0.
big_int round_half_up(const rational& v) {
  rational shifted = v + rational(1, 2);
  return numerator(shifted) / denominator(shifted);
}

// Decimal exponent e with 10^e <= v < 10^(e+1); v > 0.
int decimal_exponent(const rational& v) {
  int e = static_cast<int>(numerator(v).str().size()) -
          static_cast<int>(denominator(v).str().size());
  while (scale10(v, -e) >= 10) ++e;
  while (scale10(v, -e) < 1) --e;
  return e;
}

// Rounds v > 0 to `digits` significant digits: v ~= mantissa * 10^(e-digits+1)
// with 10^(digits-1) <= mantissa < 10^digits.
std::pair<big_int, int> round_significant(const rational& v, int digits) {
  int e = decimal_exponent(v);
  big_int mantissa = round_half_up(scale10(v, digits - 1 - e));
  if (mantissa == pow10(digits)) {
    mantissa /= 10;
    ++e;
  }
  return {mantissa, e};
}

std::string scientific(const big_int& mantissa, int e, int digits) {
  std::string m = mantissa.str();
  std::string out = m.substr(0, 1);
  if (digits > 1) out += "." + m.substr(1);
  std::string exp = std::to_string(e < 0 ? -e : e);
  if (exp.size() < 2) exp.insert(0, "0");
  out += (e < 0 ? "e-" : "e+") + exp;
  return out;
}

}  // namespace

std::string format_significant(const rational& value, int digits) {
  if (digits < 1) throw domain_error("significant digits must be positive");
  if (value == 0) return "0";
  if (value < 0) return "-" + format_significant(-value, digits);
  auto [mantissa, e] = round_significant(value, digits);
  if (e < -4 || e >= 15) return scientific(mantissa, e, digits);
  std::string m = mantissa.str();
  int point = e + 1;  // digits before the decimal point
  if (point <= 0) return "0." + std::string(-point, '0') + m;
  if (point >= digits) return m + std::string(point - digits, '0');
  return m.substr(0, point) + "." + m.substr(point);
}

std::string format_scientific(const big_int& value, int digits) {
  if (digits < 1) throw domain_error("significant digits must be positive");
  if (value == 0) return "0";
  if (value < 0) return "-" + format_scientific(-value, digits);
  auto [mantissa, e] = round_significant(rational(value), digits);
  return scientific(mantissa, e, digits);
}

std::string format_fixed(const rational& value, int places) {
  if (places < 0) throw domain_error("decimal places must be nonnegative");
  if (value < 0) return "-" + format_fixed(-value, places);
  std::string m = round_half_up(scale10(value, places)).str();
  if (places == 0) return m;
  if (static_cast<int>(m.size()) <= places)
    m.insert(0, std::string(places + 1 - m.size(), '0'));
  return m.substr(0, m.size() - places) + "." + m.substr(m.size() - places);
}

std::string format_rational(const rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start) throw domain_error("malformed rational: '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw domain_error("malformed rational: '" + text + "'");
    return big_int(s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return rational(parse_int(text));
  big_int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw domain_error("zero denominator: '" + text + "'");
  return rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace banzhaf
