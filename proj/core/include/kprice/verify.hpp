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

#ifndef KPRICE_VERIFY_HPP_
#define KPRICE_VERIFY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "kprice/auction.hpp"

namespace kprice {

// Exact pure-strategy Nash verification over the continuous bid space.
//
// A unilateral deviation by one agent lands in one of finitely many branches
// (win strictly above the rivals, win by tie priority, lose), and within each
// branch the deviator's utility is a closed-form function of the rival bids.
// The verifier therefore computes the exact supremum utility over all
// deviations in R+, not over any sample of bids.

// Analysis of one agent's deviation options against fixed rival bids.
// profitable <=> sup_deviation_utility > current_utility; a supremum that is
// not attained (the open winning branch of the first-price auction) still
// decides profitability this way, because utilities arbitrarily close to the
// supremum are achievable. witness_bid is present iff profitable, and
// substituting it strictly improves the agent's utility under run_auction.
struct DeviationReport {
  std::size_t agent = 0;  // 1-based
  Rational current_utility;
  Rational sup_deviation_utility;
  bool sup_attained = false;
  bool profitable = false;
  std::optional<Rational> witness_bid;
};

struct NashReport {
  bool is_equilibrium = false;
  std::vector<DeviationReport> per_agent;  // per_agent[i] belongs to agent i + 1
  Outcome outcome;                         // the profile as played
};

// Exact best-response analysis for one agent; all other bids held fixed.
// Witness bids are deterministic so reports reproduce byte-for-byte:
// winning deviations bid m + 1 (one above the rival maximum) when the price
// rank is >= 2, the rival maximum itself when tie priority makes it a win,
// and the midpoint of the improving interval on the open first-price branch;
// deviations to losing bid 0, or m/2 in the degenerate case where 0 wins.
DeviationReport best_deviation(const AuctionSpec& spec,
                               const ValuationProfile& valuations,
                               const BidProfile& bids, std::size_t agent);

// Runs best_deviation for every agent; the profile is a pure-strategy Nash
// equilibrium iff no agent has a profitable deviation.
NashReport is_nash(const AuctionSpec& spec, const ValuationProfile& valuations,
                   const BidProfile& bids);

}  // namespace kprice

#endif  // KPRICE_VERIFY_HPP_
