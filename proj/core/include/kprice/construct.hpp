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

#ifndef KPRICE_CONSTRUCT_HPP_
#define KPRICE_CONSTRUCT_HPP_

#include <cstddef>

#include "kprice/auction.hpp"

namespace kprice {

// Explicit equilibrium bid profiles realizing any achievable (winner, price)
// pair. Feasibility is exact: the designated agent must strictly beat the
// threshold, and p must lie in the closed interval [threshold, v_agent].
//
// Shape for price rank k in {2,...,n}: the designated agent bids v_1; the
// other agents with indices in {1,...,n-(k-2)} bid p (n-(k-1) of them); the
// agents with indices in {n-(k-3),...,n} bid v_1 (k-2 of them). The
// designated agent wins any tie at v_1 because every other v_1-bidder has a
// higher index, and the k-th highest bid is then exactly p. For k = 1 the
// profile is (p,...,p), which only agent 1 can win.

// Equilibrium with winner = designated agent and price = p.
BidProfile construct_winner(const AuctionSpec& spec,
                            const ValuationProfile& valuations,
                            std::size_t agent, const Rational& p);

// Equilibrium with price (= seller revenue) p; the agent-1 special case of
// construct_winner, feasible for every p in [threshold, v_1].
BidProfile construct_seller(const AuctionSpec& spec,
                            const ValuationProfile& valuations,
                            const Rational& p);

// Same as construct_winner but the designated agent bids v_1 + 1, so the
// maximal bid is strictly unique and the outcome no longer depends on the
// tie-breaking rule. Defined for price ranks 2..n only.
BidProfile construct_robust_variant(const AuctionSpec& spec,
                                    const ValuationProfile& valuations,
                                    std::size_t agent, const Rational& p);

}  // namespace kprice

#endif  // KPRICE_CONSTRUCT_HPP_
