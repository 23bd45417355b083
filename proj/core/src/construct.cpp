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

#include "kprice/construct.hpp"

#include <string>
#include <vector>

namespace kprice {

namespace {

// Shared feasibility gate; on success returns the profile with the given bid
// in the designated agent's slot.
BidProfile build(const AuctionSpec& spec, const ValuationProfile& valuations,
                 std::size_t agent, const Rational& p,
                 const Rational& designated_bid) {
  const std::size_t n = spec.agent_count();
  if (agent < 1 || agent > n) {
    throw PreconditionError("agent index " + std::to_string(agent) +
                            " out of range 1.." + std::to_string(n));
  }
  if (spec.first_price() && agent != 1) {
    throw PreconditionError(
        "only agent 1 can win a first-price equilibrium; agent " +
        std::to_string(agent) + " was requested");
  }
  const Rational t = threshold(spec, valuations);
  const Rational v = valuations.value(agent);
  if (!(v > t)) {
    throw PreconditionError("agent " + std::to_string(agent) +
                            " with valuation " + v.to_string() +
                            " cannot win: the threshold is " + t.to_string() +
                            " and the valuation must exceed it strictly");
  }
  if (p < t || p > v) {
    throw PreconditionError("price " + p.to_string() +
                            " outside the feasible interval [" + t.to_string() +
                            ", " + v.to_string() + "] for agent " +
                            std::to_string(agent));
  }

  if (spec.first_price()) {
    return BidProfile(std::vector<Rational>(n, p));
  }

  const std::size_t k = spec.price_rank();
  // Head agents 1..n-(k-2) bid p, tail agents n-(k-3)..n bid v_1; the
  // designated agent is always in the head because v_agent > threshold.
  const std::size_t head_end = n - (k - 2);
  const Rational v1 = valuations.value(1);
  std::vector<Rational> bids(n, p);
  for (std::size_t i = head_end + 1; i <= n; ++i) bids[i - 1] = v1;
  bids[agent - 1] = designated_bid;
  return BidProfile(std::move(bids));
}

}  // namespace

BidProfile construct_winner(const AuctionSpec& spec,
                            const ValuationProfile& valuations,
                            std::size_t agent, const Rational& p) {
  const Rational designated_bid =
      spec.first_price() ? p : valuations.value(1);
  return build(spec, valuations, agent, p, designated_bid);
}

BidProfile construct_seller(const AuctionSpec& spec,
                            const ValuationProfile& valuations,
                            const Rational& p) {
  return construct_winner(spec, valuations, 1, p);
}

BidProfile construct_robust_variant(const AuctionSpec& spec,
                                    const ValuationProfile& valuations,
                                    std::size_t agent, const Rational& p) {
  if (spec.first_price()) {
    throw PreconditionError(
        "the tie-free variant raises the winning bid above v_1, which is "
        "unsupported in the first-price auction (the winner would pay it)");
  }
  return build(spec, valuations, agent, p,
               valuations.value(1) + Rational(1));
}

}  // namespace kprice
