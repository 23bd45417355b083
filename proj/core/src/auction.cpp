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

#include "kprice/auction.hpp"

#include <algorithm>
#include <string>

namespace kprice {

namespace {

std::string Ordinal(std::size_t i) {
  return "agent " + std::to_string(i);
}

}  // namespace

ValuationProfile::ValuationProfile(std::vector<Rational> values)
    : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw PreconditionError("valuation profile needs at least 2 agents, got " +
                            std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].sign() <= 0) {
      throw PreconditionError("valuation of " + Ordinal(i + 1) +
                              " must be positive, got " + values_[i].to_string());
    }
    if (i > 0 && !(values_[i - 1] > values_[i])) {
      throw PreconditionError("valuations must be strictly decreasing; " +
                              Ordinal(i) + " has " + values_[i - 1].to_string() +
                              ", " + Ordinal(i + 1) + " has " +
                              values_[i].to_string());
    }
  }
}

Rational ValuationProfile::value(std::size_t agent) const {
  if (agent == values_.size() + 1) return Rational(0);
  if (agent < 1 || agent > values_.size()) {
    throw PreconditionError("agent index " + std::to_string(agent) +
                            " out of range 1.." + std::to_string(values_.size()));
  }
  return values_[agent - 1];
}

AuctionSpec::AuctionSpec(std::size_t agent_count, std::size_t price_rank)
    : n_(agent_count), k_(price_rank) {
  if (n_ < 2) {
    throw PreconditionError("auction needs at least 2 agents, got " +
                            std::to_string(n_));
  }
  if (k_ < 1 || k_ > n_) {
    throw PreconditionError("price rank " + std::to_string(k_) +
                            " out of range 1.." + std::to_string(n_));
  }
}

BidProfile::BidProfile(std::vector<Rational> bids) : bids_(std::move(bids)) {
  for (std::size_t i = 0; i < bids_.size(); ++i) {
    if (bids_[i].sign() < 0) {
      throw PreconditionError("bid of " + Ordinal(i + 1) +
                              " must be non-negative, got " +
                              bids_[i].to_string());
    }
  }
}

Rational BidProfile::bid(std::size_t agent) const {
  if (agent < 1 || agent > bids_.size()) {
    throw PreconditionError("agent index " + std::to_string(agent) +
                            " out of range 1.." + std::to_string(bids_.size()));
  }
  return bids_[agent - 1];
}

BidProfile BidProfile::with_bid(std::size_t agent, const Rational& bid) const {
  if (agent < 1 || agent > bids_.size()) {
    throw PreconditionError("agent index " + std::to_string(agent) +
                            " out of range 1.." + std::to_string(bids_.size()));
  }
  if (bid.sign() < 0) {
    throw PreconditionError("bid of " + Ordinal(agent) +
                            " must be non-negative, got " + bid.to_string());
  }
  std::vector<Rational> next = bids_;
  next[agent - 1] = bid;
  return BidProfile(std::move(next));
}

Rational Outcome::utility(std::size_t agent) const {
  if (agent < 1 || agent > utilities.size()) {
    throw PreconditionError("agent index " + std::to_string(agent) +
                            " out of range 1.." +
                            std::to_string(utilities.size()));
  }
  return utilities[agent - 1];
}

Rational kth_highest(std::span<const Rational> bids, std::size_t rank) {
  if (rank < 1 || rank > bids.size()) {
    throw PreconditionError("rank " + std::to_string(rank) +
                            " out of range 1.." + std::to_string(bids.size()));
  }
  std::vector<Rational> sorted(bids.begin(), bids.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<Rational>());
  return sorted[rank - 1];
}

std::size_t winning_agent(const ValuationProfile& valuations,
                          const BidProfile& bids) {
  if (valuations.size() != bids.size()) {
    throw PreconditionError("bid profile has " + std::to_string(bids.size()) +
                            " entries for " + std::to_string(valuations.size()) +
                            " agents");
  }
  std::size_t winner = 1;
  for (std::size_t agent = 2; agent <= bids.size(); ++agent) {
    if (bids.bid(agent) > bids.bid(winner)) winner = agent;
  }
  return winner;
}

Outcome run_auction(const AuctionSpec& spec, const ValuationProfile& valuations,
                    const BidProfile& bids) {
  if (valuations.size() != spec.agent_count()) {
    throw PreconditionError("valuation profile has " +
                            std::to_string(valuations.size()) +
                            " entries for an auction with " +
                            std::to_string(spec.agent_count()) + " agents");
  }
  if (bids.size() != spec.agent_count()) {
    throw PreconditionError("bid profile has " + std::to_string(bids.size()) +
                            " entries for an auction with " +
                            std::to_string(spec.agent_count()) + " agents");
  }
  Outcome outcome;
  outcome.winner = winning_agent(valuations, bids);
  outcome.price = kth_highest(bids.bids(), spec.price_rank());
  outcome.utilities.assign(spec.agent_count(), Rational(0));
  outcome.utilities[outcome.winner - 1] =
      valuations.value(outcome.winner) - outcome.price;
  return outcome;
}

Rational threshold(const AuctionSpec& spec, const ValuationProfile& valuations) {
  if (valuations.size() != spec.agent_count()) {
    throw PreconditionError("valuation profile has " +
                            std::to_string(valuations.size()) +
                            " entries for an auction with " +
                            std::to_string(spec.agent_count()) + " agents");
  }
  // v_{n + 3 - k'} with k' in {2, ..., n+1}, so the index lies in {2, ..., n+1}
  // and the sentinel value(n + 1) == 0 covers the second-price case.
  return valuations.value(spec.agent_count() + 3 - spec.canonical_rank());
}

}  // namespace kprice
