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

#ifndef KPRICE_ORACLE_HPP_
#define KPRICE_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kprice/auction.hpp"
#include "kprice/characterize.hpp"
#include "kprice/verify.hpp"

namespace kprice {

// Brute-force search for equilibria among bid profiles drawn from a finite
// grid, with the exact continuous-space verifier as the equilibrium test.
// The grid restricts which profiles are examined, never which deviations are
// considered, so every reported profile is a true equilibrium of the
// continuous game: the search has one-sided error and enumerated outcomes
// can be checked against the closed-form characterization unconditionally.

// Candidate bid values: strictly increasing, non-negative, nonempty. The
// constructor sorts and deduplicates its input.
class GridSpec {
 public:
  explicit GridSpec(std::vector<Rational> values);

  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool contains(const Rational& x) const;

 private:
  std::vector<Rational> values_;
};

// {0} + all valuations + midpoints of adjacent valuations + {v_1 + 1}: hits
// both endpoints and an interior point of every characterized price
// interval, plus one value above every valuation.
GridSpec default_grid(const ValuationProfile& valuations);

inline constexpr std::uint64_t kDefaultProfileBudget = 10'000'000;

struct EquilibriumProfile {
  BidProfile bids;
  Outcome outcome;
};

// Every profile in grid^n that passes is_nash, in lexicographic profile
// order, each with its outcome. Throws BudgetExceededError before examining
// anything if |grid|^n exceeds the budget.
std::vector<EquilibriumProfile> enumerate_equilibria(
    const AuctionSpec& spec, const ValuationProfile& valuations,
    const GridSpec& grid, std::uint64_t budget = kDefaultProfileBudget);

struct WinnerPrice {
  std::size_t winner = 0;  // 1-based
  Rational price;

  friend auto operator<=>(const WinnerPrice&, const WinnerPrice&) = default;
};

// An enumerated outcome the closed form says cannot happen, with the profile
// exhibiting it. Any occurrence is an implementation bug.
struct SoundnessViolation {
  WinnerPrice outcome;
  BidProfile profile;
};

// A characterized outcome whose constructing bid values all lie on the grid
// yet which enumeration failed to find.
struct CompletenessMiss {
  std::size_t agent = 0;
  Rational price;
};

struct CrosscheckReport {
  std::vector<WinnerPrice> enumerated_outcomes;  // sorted, deduplicated
  OutcomeSet predicted;
  std::vector<SoundnessViolation> soundness_violations;
  std::vector<CompletenessMiss> completeness_misses;
  std::uint64_t profiles_examined = 0;
  std::uint64_t equilibria_found = 0;

  bool clean() const {
    return soundness_violations.empty() && completeness_misses.empty();
  }
};

// Enumerates and compares against winner_price_set in both directions.
// Soundness (unconditional): every enumerated (winner, price) lies in the
// predicted set. Completeness on the grid (conditional): for every agent the
// closed form lets win and every grid point p in its interval, the outcome
// is found — provided the constructing bid values (p and v_1 for price ranks
// >= 2, just p for the first-price auction) are all grid points.
CrosscheckReport crosscheck(const AuctionSpec& spec,
                            const ValuationProfile& valuations,
                            const GridSpec& grid,
                            std::uint64_t budget = kDefaultProfileBudget);

}  // namespace kprice

#endif  // KPRICE_ORACLE_HPP_
