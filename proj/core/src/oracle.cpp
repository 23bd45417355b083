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

#include "kprice/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <utility>

namespace kprice {

namespace {

// |grid|^n, saturating at UINT64_MAX; a saturated count always exceeds any
// real budget, so precision above the cap is irrelevant.
std::uint64_t profile_count(std::uint64_t grid_size, std::size_t agents) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < agents; ++i) {
    if (grid_size != 0 && count > kMax / grid_size) return kMax;
    count *= grid_size;
  }
  return count;
}

}  // namespace

GridSpec::GridSpec(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw PreconditionError("bid grid must be nonempty");
  }
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (values_.front().sign() < 0) {
    throw PreconditionError("bid grid values must be non-negative, got " +
                            values_.front().to_string());
  }
}

bool GridSpec::contains(const Rational& x) const {
  return std::binary_search(values_.begin(), values_.end(), x);
}

GridSpec default_grid(const ValuationProfile& valuations) {
  std::vector<Rational> values;
  values.reserve(2 * valuations.size() + 2);
  values.emplace_back(0);
  for (std::size_t i = 1; i <= valuations.size(); ++i) {
    values.push_back(valuations.value(i));
    if (i > 1) {
      values.push_back((valuations.value(i - 1) + valuations.value(i)) /
                       Rational(2));
    }
  }
  values.push_back(valuations.value(1) + Rational(1));
  return GridSpec(std::move(values));
}

std::vector<EquilibriumProfile> enumerate_equilibria(
    const AuctionSpec& spec, const ValuationProfile& valuations,
    const GridSpec& grid, std::uint64_t budget) {
  const std::size_t n = spec.agent_count();
  const std::uint64_t required = profile_count(grid.size(), n);
  if (required > budget) {
    throw BudgetExceededError(required, budget);
  }

  std::vector<EquilibriumProfile> equilibria;
  // Odometer over grid indices, rightmost digit fastest, so profiles come
  // out in lexicographic order.
  std::vector<std::size_t> digits(n, 0);
  std::vector<Rational> bids(n, grid.values().front());
  for (;;) {
    BidProfile profile(bids);
    NashReport report = is_nash(spec, valuations, profile);
    if (report.is_equilibrium) {
      equilibria.push_back({std::move(profile), std::move(report.outcome)});
    }

    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < grid.size()) {
        bids[pos] = grid.values()[digits[pos]];
        break;
      }
      digits[pos] = 0;
      bids[pos] = grid.values().front();
      if (pos == 0) return equilibria;
    }
    if (n == 0) return equilibria;  // unreachable: specs require n >= 2
  }
}

CrosscheckReport crosscheck(const AuctionSpec& spec,
                            const ValuationProfile& valuations,
                            const GridSpec& grid, std::uint64_t budget) {
  CrosscheckReport report;
  report.predicted = winner_price_set(spec, valuations);
  report.profiles_examined =
      profile_count(grid.size(), spec.agent_count());  // throws below if over

  std::vector<EquilibriumProfile> equilibria =
      enumerate_equilibria(spec, valuations, grid, budget);
  report.equilibria_found = equilibria.size();

  // Deduplicate outcomes, keeping the lexicographically first profile for
  // each as the soundness witness.
  std::map<WinnerPrice, const BidProfile*> first_profile;
  for (const EquilibriumProfile& eq : equilibria) {
    WinnerPrice outcome{eq.outcome.winner, eq.outcome.price};
    first_profile.emplace(outcome, &eq.bids);
  }
  report.enumerated_outcomes.reserve(first_profile.size());
  for (const auto& [outcome, profile] : first_profile) {
    report.enumerated_outcomes.push_back(outcome);
    if (!report.predicted.contains(outcome.winner, outcome.price)) {
      report.soundness_violations.push_back({outcome, *profile});
    }
  }

  // Completeness on the grid: applicable only when the constructing bid
  // values are themselves grid points (p always is; v_1 must be checked for
  // price ranks >= 2).
  const bool construction_on_grid =
      spec.first_price() || grid.contains(valuations.value(1));
  if (construction_on_grid) {
    for (std::size_t agent = 1; agent <= spec.agent_count(); ++agent) {
      const auto& interval = report.predicted.agent_interval(agent);
      if (!interval.has_value()) continue;
      for (const Rational& p : grid.values()) {
        if (!interval->contains(p)) continue;
        if (!std::binary_search(report.enumerated_outcomes.begin(),
                                report.enumerated_outcomes.end(),
                                WinnerPrice{agent, p})) {
          report.completeness_misses.push_back({agent, p});
        }
      }
    }
  }
  return report;
}

}  // namespace kprice
