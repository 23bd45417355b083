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

#ifndef KPRICE_TOOLS_PROBLEM_IO_HPP_
#define KPRICE_TOOLS_PROBLEM_IO_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kprice/auction.hpp"

namespace kprice::cli {

// Any defect in a problem file or other user-supplied text: unreadable file,
// malformed JSON, wrong types, unknown fields, or field values that do not
// form a valid auction. Messages name the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A problem file: auction size and price rank, the valuations, and
// optionally a bid profile for the commands that analyze one.
//
//   {"n": 5, "k": 5, "valuations": [50, 40, 30, 20, 10],
//    "bids": [35, 70, 65, 60, 55]}
//
// k also accepts the aliases "first", "second" and "lowest". Rationals are
// written as integers or "num/den" strings; decimal floats are rejected so
// every value stays exact.
struct Problem {
  AuctionSpec spec;
  ValuationProfile valuations;
  std::optional<BidProfile> bids;
};

// Parses problem-file text. Throws ParseError on any defect.
Problem parse_problem(const std::string& text);

// Reads and parses the file at path. Throws ParseError (also for I/O).
Problem load_problem(const std::string& path);

// Serializes a problem back to file text; bids may be null.
std::string problem_to_json(const AuctionSpec& spec,
                            const ValuationProfile& valuations,
                            const BidProfile* bids);

// Comma-separated rationals, e.g. "0,1/2,1"; for the --grid flag.
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace kprice::cli

#endif  // KPRICE_TOOLS_PROBLEM_IO_HPP_
