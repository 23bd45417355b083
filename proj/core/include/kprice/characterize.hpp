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

#ifndef KPRICE_CHARACTERIZE_HPP_
#define KPRICE_CHARACTERIZE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "kprice/auction.hpp"

namespace kprice {

// Closed-form characterization of equilibrium outcomes: which agents can win,
// at which prices, what revenue the seller can see, and how the worst-case
// welfare ranks the auctions across price ranks. All endpoints are exact
// rationals and all intervals closed — both endpoints are realized by
// constructible equilibria, including the zero-utility corner p = v_agent.

struct PriceInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }

  friend bool operator==(const PriceInterval&, const PriceInterval&) = default;
};

// Everything equilibria can produce for one auction: per_agent[i] is the
// price interval at which agent i + 1 can win, absent when that agent cannot
// win in any equilibrium. Present intervals are exactly [threshold, v_agent].
struct OutcomeSet {
  std::vector<std::optional<PriceInterval>> per_agent;
  PriceInterval revenue_interval;
  Rational worst_case_welfare;
  Rational worst_case_revenue;

  // 1-based accessor mirroring agent indexing elsewhere.
  const std::optional<PriceInterval>& agent_interval(std::size_t agent) const;

  bool contains(std::size_t winner, const Rational& price) const;
};

// [threshold, v_1]: exactly the prices (= revenues) achievable in
// equilibrium.
PriceInterval revenue_interval(const AuctionSpec& spec,
                               const ValuationProfile& valuations);

// Full outcome characterization: agent i can win at price p iff
// v_i > threshold and p in [threshold, v_i].
OutcomeSet winner_price_set(const AuctionSpec& spec,
                            const ValuationProfile& valuations);

// Minimum winner valuation over all equilibria: v_{n-(k'-2)} under the
// canonical rank, i.e. v_n for the second-price auction up to v_1 for the
// first-price auction.
Rational worst_case_welfare(const AuctionSpec& spec,
                            const ValuationProfile& valuations);

// Minimum equilibrium revenue; the lower endpoint of revenue_interval.
Rational worst_case_revenue(const AuctionSpec& spec,
                            const ValuationProfile& valuations);

// One row of the welfare ranking. price_rank is the auction's k, with 1
// (first price) listed last because it behaves as canonical rank n + 1.
struct WelfareEntry {
  std::size_t price_rank = 0;
  Rational welfare;

  friend bool operator==(const WelfareEntry&, const WelfareEntry&) = default;
};

// Worst-case welfare for every auction over the given valuations, ordered by
// canonical rank 2..n+1; the welfare values are strictly increasing.
std::vector<WelfareEntry> welfare_ordering(const ValuationProfile& valuations);

}  // namespace kprice

#endif  // KPRICE_CHARACTERIZE_HPP_
