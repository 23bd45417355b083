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

#include "kprice/characterize.hpp"

#include <string>

namespace kprice {

const std::optional<PriceInterval>& OutcomeSet::agent_interval(
    std::size_t agent) const {
  if (agent < 1 || agent > per_agent.size()) {
    throw PreconditionError("agent index " + std::to_string(agent) +
                            " out of range 1.." +
                            std::to_string(per_agent.size()));
  }
  return per_agent[agent - 1];
}

bool OutcomeSet::contains(std::size_t winner, const Rational& price) const {
  const auto& interval = agent_interval(winner);
  return interval.has_value() && interval->contains(price);
}

PriceInterval revenue_interval(const AuctionSpec& spec,
                               const ValuationProfile& valuations) {
  return {threshold(spec, valuations), valuations.value(1)};
}

OutcomeSet winner_price_set(const AuctionSpec& spec,
                            const ValuationProfile& valuations) {
  const Rational t = threshold(spec, valuations);
  OutcomeSet set;
  set.per_agent.reserve(spec.agent_count());
  for (std::size_t agent = 1; agent <= spec.agent_count(); ++agent) {
    const Rational v = valuations.value(agent);
    if (v > t) {
      set.per_agent.emplace_back(PriceInterval{t, v});
    } else {
      set.per_agent.emplace_back(std::nullopt);
    }
  }
  set.revenue_interval = revenue_interval(spec, valuations);
  set.worst_case_welfare = worst_case_welfare(spec, valuations);
  set.worst_case_revenue = t;
  return set;
}

Rational worst_case_welfare(const AuctionSpec& spec,
                            const ValuationProfile& valuations) {
  // v_{n + 2 - k'}: the lowest valuation still strictly above the threshold
  // v_{n + 3 - k'}, i.e. the worst winner any equilibrium admits.
  return valuations.value(spec.agent_count() + 2 - spec.canonical_rank());
}

Rational worst_case_revenue(const AuctionSpec& spec,
                            const ValuationProfile& valuations) {
  return threshold(spec, valuations);
}

std::vector<WelfareEntry> welfare_ordering(const ValuationProfile& valuations) {
  const std::size_t n = valuations.size();
  std::vector<WelfareEntry> entries;
  entries.reserve(n);
  for (std::size_t canonical = 2; canonical <= n + 1; ++canonical) {
    const std::size_t price_rank = canonical == n + 1 ? 1 : canonical;
    entries.push_back({price_rank, valuations.value(n + 2 - canonical)});
  }
  return entries;
}

}  // namespace kprice
