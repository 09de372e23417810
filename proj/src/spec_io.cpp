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

#include "banzhaf/spec_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "banzhaf/errors.hpp"

namespace banzhaf {

namespace {

using json = nlohmann::ordered_json;

constexpr std::int64_t max_total_weight = std::int64_t{1} << 62;

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<std::string_view> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (auto a : allowed) ok = ok || it.key() == a;
    if (!ok) throw validation_error(path.empty() ? it.key() : path + "." + it.key(), "unknown key");
  }
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw validation_error(path + "." + key, "missing");
  return *it;
}

std::int64_t as_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw validation_error(path, "expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() >
                                    static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw validation_error(path, "integer too large");
  return v.get<std::int64_t>();
}

std::vector<std::string> parse_voters(const json& v, const std::string& path) {
  if (!v.is_array()) throw validation_error(path, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!v[i].is_string()) throw validation_error(p, "expected a string label");
    auto s = v[i].get<std::string>();
    if (s.empty()) throw validation_error(p, "empty label");
    out.push_back(std::move(s));
  }
  return out;
}

chamber parse_chamber(const json& c, const std::string& path) {
  if (!c.is_object()) throw validation_error(path, "expected an object");
  const json& type = require(c, "type", path);
  if (!type.is_string()) throw validation_error(path + ".type", "expected a string");
  const auto t = type.get<std::string>();
  auto voters = parse_voters(require(c, "voters", path), path + ".voters");

  if (t == "k_of_n") {
    reject_unknown_keys(c, path, {"type", "voters", "k"});
    const auto k = as_integer(require(c, "k", path), path + ".k");
    if (k < 0 || static_cast<std::uint64_t>(k) > voters.size())
      throw validation_error(path + ".k", "k = " + std::to_string(k) + " outside 0.." +
                                              std::to_string(voters.size()));
    const std::size_t n = voters.size();
    return chamber(kofn_rule{static_cast<std::size_t>(k), n}, std::move(voters));
  }
  if (t == "weighted") {
    reject_unknown_keys(c, path, {"type", "voters", "weights", "quota"});
    if (voters.empty()) throw validation_error(path + ".voters", "a weighted chamber needs voters");
    const json& w = require(c, "weights", path);
    if (!w.is_array()) throw validation_error(path + ".weights", "expected an array");
    if (w.size() != voters.size())
      throw validation_error(path + ".weights", std::to_string(w.size()) + " weights for " +
                                                    std::to_string(voters.size()) + " voters");
    std::vector<std::int64_t> weights;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::string p = path + ".weights[" + std::to_string(i) + "]";
      const auto x = as_integer(w[i], p);
      if (x <= 0) throw validation_error(p, "weights must be positive");
      if (x > max_total_weight - total) throw validation_error(p, "total weight too large");
      total += x;
      weights.push_back(x);
    }
    const auto quota = as_integer(require(c, "quota", path), path + ".quota");
    if (quota < 1 || quota > total)
      throw validation_error(path + ".quota", "quota " + std::to_string(quota) + " outside 1.." +
                                                  std::to_string(total));
    return chamber(scalar_system(quota, std::move(weights)), std::move(voters));
  }
  throw validation_error(path + ".type", "expected \"weighted\" or \"k_of_n\", got \"" + t + "\"");
}

spec_options parse_options(const json& o) {
  if (!o.is_object()) throw validation_error("options", "expected an object");
  reject_unknown_keys(o, "options", {"method", "digits", "oracle_cap"});
  spec_options out;
  if (auto it = o.find("method"); it != o.end()) {
    if (!it->is_string()) throw validation_error("options.method", "expected a string");
    out.default_method = parse_method(it->get<std::string>());
    if (!out.default_method)
      throw validation_error("options.method", "unknown method \"" + it->get<std::string>() + "\"");
  }
  if (auto it = o.find("digits"); it != o.end()) {
    const auto d = as_integer(*it, "options.digits");
    if (d < 1 || d > 100) throw validation_error("options.digits", "expected 1..100");
    out.digits = static_cast<int>(d);
  }
  if (auto it = o.find("oracle_cap"); it != o.end()) {
    const auto c = as_integer(*it, "options.oracle_cap");
    if (c < 0 || c > static_cast<std::int64_t>(max_oracle_cap))
      throw validation_error("options.oracle_cap",
                             "expected 0.." + std::to_string(max_oracle_cap));
    out.oracle_cap = static_cast<std::size_t>(c);
  }
  return out;
}

}  // namespace

system_spec parse_spec_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw validation_error("$", "expected a JSON object");
  reject_unknown_keys(doc, "", {"name", "chambers", "options"});

  std::string name;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw validation_error("name", "expected a string");
    name = it->get<std::string>();
  }
  auto it = doc.find("chambers");
  if (it == doc.end()) throw validation_error("chambers", "missing");
  if (!it->is_array()) throw validation_error("chambers", "expected an array");
  if (it->empty()) throw validation_error("chambers", "at least one chamber is required");

  std::vector<chamber> chambers;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const std::string path = "chambers[" + std::to_string(i) + "]";
    chambers.push_back(parse_chamber((*it)[i], path));
    const auto& voters = chambers.back().voters();
    for (std::size_t j = 0; j < voters.size(); ++j)
      if (!seen.insert(voters[j]).second)
        throw validation_error(path + ".voters[" + std::to_string(j) + "]",
                               "duplicate label \"" + voters[j] + "\"");
  }

  spec_options options;
  if (auto o = doc.find("options"); o != doc.end()) options = parse_options(*o);
  return {chamber_system(std::move(name), std::move(chambers)), options};
}

system_spec parse_spec(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read system file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return parse_spec_text(text);
}

std::string write_spec(const system_spec& spec) {
  json doc;
  doc["name"] = spec.system.name();
  json chambers = json::array();
  for (const auto& c : spec.system.chambers()) {
    json jc;
    if (const auto* r = std::get_if<kofn_rule>(&c.rule())) {
      jc["type"] = "k_of_n";
      jc["voters"] = c.voters();
      jc["k"] = r->k;
    } else {
      const auto& s = std::get<scalar_system>(c.rule());
      jc["type"] = "weighted";
      jc["voters"] = c.voters();
      jc["weights"] = s.weights();
      jc["quota"] = s.quota();
    }
    chambers.push_back(std::move(jc));
  }
  doc["chambers"] = std::move(chambers);
  json options = json::object();
  if (spec.options.default_method) options["method"] = to_string(*spec.options.default_method);
  if (spec.options.digits) options["digits"] = *spec.options.digits;
  if (spec.options.oracle_cap) options["oracle_cap"] = *spec.options.oracle_cap;
  if (!options.empty()) doc["options"] = std::move(options);
  return doc.dump(2) + "\n";
}

}  // namespace banzhaf
