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

#include "kprice/verify.hpp"

#include <algorithm>
#include <string>

namespace kprice {

namespace {

// Witness for a deviation to losing. Bidding 0 loses in every reachable case
// (the sole exception, all rivals at 0 with the deviator holding tie
// priority, is exactly the case where losing is impossible); half the rival
// maximum is kept as a defensive fallback.
Rational losing_witness(const ValuationProfile& valuations,
                        const BidProfile& bids, std::size_t agent,
                        const Rational& rival_max) {
  if (winning_agent(valuations, bids.with_bid(agent, Rational(0))) != agent) {
    return Rational(0);
  }
  return rival_max / Rational(2);
}

}  // namespace

DeviationReport best_deviation(const AuctionSpec& spec,
                               const ValuationProfile& valuations,
                               const BidProfile& bids, std::size_t agent) {
  const std::size_t n = spec.agent_count();
  if (agent < 1 || agent > n) {
    throw PreconditionError("agent index " + std::to_string(agent) +
                            " out of range 1.." + std::to_string(n));
  }

  const Rational v = valuations.value(agent);
  std::vector<Rational> others;
  others.reserve(n - 1);
  for (std::size_t j = 1; j <= n; ++j) {
    if (j != agent) others.push_back(bids.bid(j));
  }
  const Rational m = *std::max_element(others.begin(), others.end());

  // Bidding exactly m wins iff every rival at the maximum has a higher index.
  bool priority_at_max = true;
  for (std::size_t j = 1; j < agent; ++j) {
    if (bids.bid(j) == m) priority_at_max = false;
  }
  // Losing is impossible only for agent 1 against all-zero rivals: any bid
  // ties at the maximum or exceeds it, and agent 1 wins every tie.
  const bool can_lose = !(agent == 1 && m == Rational(0));

  DeviationReport report;
  report.agent = agent;
  report.current_utility = run_auction(spec, valuations, bids).utility(agent);

  if (!spec.first_price()) {
    // Any winning bid tops the rival maximum, so the k-th highest of the
    // combined profile is the (k-1)-th highest rival bid: the winning
    // utility is one constant, attained e.g. at m + 1.
    const Rational win_utility =
        v - kth_highest(others, spec.price_rank() - 1);
    Rational sup = win_utility;
    if (can_lose && Rational(0) > sup) sup = Rational(0);
    report.sup_deviation_utility = sup;
    report.sup_attained = true;
    report.profitable = sup > report.current_utility;
    if (report.profitable) {
      if (win_utility == sup) {
        report.witness_bid = m + Rational(1);
      } else {
        report.witness_bid = losing_witness(valuations, bids, agent, m);
      }
    }
    return report;
  }

  // First price: the winner pays its own bid. Winning strictly above m gives
  // utility v - b', approaching v - m without reaching it; winning at m
  // itself requires tie priority and attains v - m exactly.
  const Rational win_sup = v - m;
  Rational sup = win_sup;
  bool attained = priority_at_max;
  if (can_lose && Rational(0) >= sup) {
    sup = Rational(0);
    attained = true;  // a losing bid attains 0 exactly
  }
  report.sup_deviation_utility = sup;
  report.sup_attained = attained;
  // Strict comparison decides profitability even when the supremum is not
  // attained: utilities are dense below an open supremum, so some concrete
  // bid beats the current utility iff the supremum does.
  report.profitable = sup > report.current_utility;
  if (report.profitable) {
    if (priority_at_max && win_sup == sup) {
      report.witness_bid = m;
    } else if (can_lose && sup == Rational(0)) {
      report.witness_bid = losing_witness(valuations, bids, agent, m);
    } else {
      // Open branch: with current utility u, any bid in (m, v - max(u, 0))
      // wins and improves strictly; take the midpoint. The interval is
      // nonempty exactly because sup = v - m exceeds both u and 0 here.
      const Rational floor_utility =
          report.current_utility > Rational(0) ? report.current_utility
                                               : Rational(0);
      report.witness_bid = (m + (v - floor_utility)) / Rational(2);
    }
  }
  return report;
}

NashReport is_nash(const AuctionSpec& spec, const ValuationProfile& valuations,
                   const BidProfile& bids) {
  NashReport report;
  report.outcome = run_auction(spec, valuations, bids);
  report.per_agent.reserve(spec.agent_count());
  report.is_equilibrium = true;
  for (std::size_t agent = 1; agent <= spec.agent_count(); ++agent) {
    report.per_agent.push_back(best_deviation(spec, valuations, bids, agent));
    if (report.per_agent.back().profitable) report.is_equilibrium = false;
  }
  return report;
}

}  // namespace kprice
