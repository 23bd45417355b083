// Copyright 2026 The kprice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "problem_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace kprice::cli {

namespace {

using nlohmann::json;

Rational parse_rational_value(const json& value, const std::string& field) {
  if (value.is_number_float()) {
    throw ParseError("field " + field +
                     ": decimal floats are not accepted; write the exact "
                     "value as an integer or a \"num/den\" string");
  }
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw ParseError("field " + field + ": integer out of range");
  }
  if (value.is_number_integer()) {
    return Rational(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    if (auto parsed = Rational::parse(text)) return *parsed;
    throw ParseError("field " + field + ": \"" + text +
                     "\" is not an integer or \"num/den\" rational");
  }
  throw ParseError("field " + field +
                   ": expected an integer or \"num/den\" string");
}

std::vector<Rational> parse_rational_array(const json& value,
                                           const std::string& field) {
  if (!value.is_array()) {
    throw ParseError("field " + field + ": expected an array of rationals");
  }
  std::vector<Rational> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(
        parse_rational_value(value[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::size_t parse_count(const json& value, const std::string& field) {
  if (!value.is_number_integer() || value.is_number_float()) {
    throw ParseError("field " + field + ": expected an integer");
  }
  const std::int64_t raw =
      value.is_number_unsigned()
          ? static_cast<std::int64_t>(
                std::min<std::uint64_t>(value.get<std::uint64_t>(),
                                        std::numeric_limits<std::int64_t>::max()))
          : value.get<std::int64_t>();
  if (raw < 0) {
    throw ParseError("field " + field + ": expected a non-negative integer");
  }
  return static_cast<std::size_t>(raw);
}

std::size_t parse_price_rank(const json& value, std::size_t n) {
  if (value.is_string()) {
    const std::string alias = value.get<std::string>();
    if (alias == "first") return 1;
    if (alias == "second") return 2;
    if (alias == "lowest") return n;
    throw ParseError("field k: unknown alias \"" + alias +
                     "\" (accepted: \"first\", \"second\", \"lowest\")");
  }
  return parse_count(value, "k");
}

json rational_to_json(const Rational& value) {
  if (value.den() == 1) return json(value.num());
  return json(value.to_string());
}

}  // namespace

Problem parse_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ParseError("problem file must be a JSON object");
  }
  for (const auto& [key, unused] : j.items()) {
    if (key != "n" && key != "k" && key != "valuations" && key != "bids") {
      throw ParseError("unknown field \"" + key + "\"");
    }
  }
  for (const char* required : {"n", "k", "valuations"}) {
    if (!j.contains(required)) {
      throw ParseError("field " + std::string(required) + ": missing");
    }
  }

  const std::size_t n = parse_count(j["n"], "n");
  const std::size_t k = parse_price_rank(j["k"], n);
  std::vector<Rational> valuations = parse_rational_array(j["valuations"], "valuations");
  if (valuations.size() != n) {
    throw ParseError("field n: declares " + std::to_string(n) +
                     " agents but " + std::to_string(valuations.size()) +
                     " valuations are given");
  }

  // Anything wrong with the values themselves is still a defect of the file,
  // so it surfaces as a ParseError, not as a precondition failure.
  try {
    AuctionSpec spec(n, k);
    ValuationProfile profile(std::move(valuations));
    std::optional<BidProfile> bids;
    if (j.contains("bids")) {
      std::vector<Rational> raw = parse_rational_array(j["bids"], "bids");
      if (raw.size() != n) {
        throw ParseError("field bids: expected " + std::to_string(n) +
                         " entries, got " + std::to_string(raw.size()));
      }
      bids.emplace(std::move(raw));
    }
    return Problem{std::move(spec), std::move(profile), std::move(bids)};
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid problem: ") + e.what());
  }
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

std::string problem_to_json(const AuctionSpec& spec,
                            const ValuationProfile& valuations,
                            const BidProfile* bids) {
  json j;
  j["n"] = spec.agent_count();
  j["k"] = spec.price_rank();
  json vals = json::array();
  for (const Rational& v : valuations.values()) vals.push_back(rational_to_json(v));
  j["valuations"] = std::move(vals);
  if (bids != nullptr) {
    json bs = json::array();
    for (const Rational& b : bids->bids()) bs.push_back(rational_to_json(b));
    j["bids"] = std::move(bs);
  }
  return j.dump(2) + "\n";
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  std::size_t index = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string token = text.substr(start, end - start);
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    token = first == std::string::npos ? std::string()
                                       : token.substr(first, last - first + 1);
    auto parsed = Rational::parse(token);
    if (!parsed) {
      throw ParseError("grid entry " + std::to_string(index) + ": \"" + token +
                       "\" is not an integer or \"num/den\" rational");
    }
    out.push_back(*parsed);
    ++index;
    start = end + 1;
  }
  return out;
}

}  // namespace kprice::cli
