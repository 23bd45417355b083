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

#ifndef KPRICE_TOOLS_RENDER_HPP_
#define KPRICE_TOOLS_RENDER_HPP_

#include <string>

#include "kprice/characterize.hpp"
#include "kprice/oracle.hpp"
#include "kprice/verify.hpp"

namespace kprice::cli {

// Report rendering. Text is for people; CSV is stable, exact (rationals are
// rendered as "num" or "num/den", never as decimals) and carries only the
// tabular part of each report — verdicts travel in the exit code.
enum class Format { kText, kCsv };

// winner/price/utilities; CSV: one header and one row.
std::string render_outcome(const Outcome& outcome, Format format);

// Verdict, outcome and the per-agent deviation table; CSV: the table only.
std::string render_nash(const NashReport& report, Format format);

// Per-agent winning intervals plus the revenue interval and worst cases;
// CSV rows match the figure dataset: k,agent,can_win,price_lo,price_hi,welfare.
std::string render_outcome_set(const AuctionSpec& spec,
                               const ValuationProfile& valuations,
                               const OutcomeSet& set, Format format);

// Constructed profile with its verified outcome; CSV: agent,bid rows.
std::string render_construction(const BidProfile& bids,
                                const NashReport& verification, Format format);

// Enumeration counts, outcome list, and any cross-check findings;
// CSV: winner,price rows of the enumerated outcomes.
std::string render_crosscheck(const CrosscheckReport& report, Format format);

// Label used for an auction in figure datasets and --all-k listings:
// the price rank as digits, or "first" for k = 1.
std::string rank_label(std::size_t price_rank);

}  // namespace kprice::cli

#endif  // KPRICE_TOOLS_RENDER_HPP_
