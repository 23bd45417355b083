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

#ifndef KPRICE_AUCTION_HPP_
#define KPRICE_AUCTION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "kprice/errors.hpp"
#include "kprice/rational.hpp"

namespace kprice {

// Agents are identified by 1-based index in strictly descending valuation
// order: agent 1 holds the highest valuation. Ties at the maximal bid are
// resolved in favor of the lowest index, i.e. the highest valuation.

// Strictly decreasing positive valuations v_1 > v_2 > ... > v_n > 0, n >= 2.
// Profiles that are not strictly decreasing are rejected, never sorted:
// agent identity is positional. value(n + 1) is the zero sentinel.
class ValuationProfile {
 public:
  explicit ValuationProfile(std::vector<Rational> values);

  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }

  // 1-based; value(size() + 1) == 0.
  Rational value(std::size_t agent) const;

 private:
  std::vector<Rational> values_;
};

// Number of agents n (>= 2) and price rank k in {1, ..., n}; k = 1 is the
// first-price auction, k = n the lowest-price auction. canonical_rank()
// returns k' in {2, ..., n+1}, the index the closed-form results use, with
// the first-price auction carried as k' = n + 1.
class AuctionSpec {
 public:
  AuctionSpec(std::size_t agent_count, std::size_t price_rank);

  std::size_t agent_count() const { return n_; }
  std::size_t price_rank() const { return k_; }
  std::size_t canonical_rank() const { return k_ == 1 ? n_ + 1 : k_; }
  bool first_price() const { return k_ == 1; }

 private:
  std::size_t n_;
  std::size_t k_;
};

// One non-negative bid per agent. Length is checked against the auction
// spec at the point of use.
class BidProfile {
 public:
  explicit BidProfile(std::vector<Rational> bids);

  std::size_t size() const { return bids_.size(); }
  const std::vector<Rational>& bids() const { return bids_; }

  Rational bid(std::size_t agent) const;

  // Copy with one agent's bid replaced; the unilateral-deviation primitive.
  BidProfile with_bid(std::size_t agent, const Rational& bid) const;

 private:
  std::vector<Rational> bids_;
};

struct Outcome {
  std::size_t winner = 0;  // 1-based
  Rational price;
  std::vector<Rational> utilities;  // utilities[i] belongs to agent i + 1

  Rational utility(std::size_t agent) const;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

// rank-th largest element counting multiplicity (rank is 1-based).
Rational kth_highest(std::span<const Rational> bids, std::size_t rank);

// Least index among the agents submitting the maximal bid; with strictly
// decreasing valuations that is the tied agent with the highest valuation.
std::size_t winning_agent(const ValuationProfile& valuations, const BidProfile& bids);

// Winner per winning_agent(), price = kth_highest(bids, k), winner's utility
// v_winner - price (possibly negative), all other utilities exactly 0.
Outcome run_auction(const AuctionSpec& spec, const ValuationProfile& valuations,
                    const BidProfile& bids);

// Lower endpoint of the equilibrium price range: v_{n-(k'-3)} under the
// extended indexing, so 0 for the second-price auction and v_2 for the
// first-price auction.
Rational threshold(const AuctionSpec& spec, const ValuationProfile& valuations);

}  // namespace kprice

#endif  // KPRICE_AUCTION_HPP_
