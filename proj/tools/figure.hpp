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

#ifndef KPRICE_TOOLS_FIGURE_HPP_
#define KPRICE_TOOLS_FIGURE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "kprice/characterize.hpp"

namespace kprice::cli {

// The at-a-glance summary of every auction over one valuation profile: for
// each price rank (ordered by canonical rank, first-price last) and each
// agent, whether the agent can win, at which prices, and the welfare its win
// yields. Emitted as an exact CSV dataset plus a static SVG chart whose bars
// correspond one-to-one to the dataset rows.

struct FigureRow {
  std::string k_label;  // "2".."n", or "first"
  std::size_t agent = 0;
  bool can_win = false;
  std::optional<PriceInterval> prices;  // absent iff the agent cannot win
  std::optional<Rational> welfare;      // the agent's valuation, when winning

  friend bool operator==(const FigureRow&, const FigureRow&) = default;
};

// One row per (auction, agent), auctions ordered by canonical rank 2..n+1.
std::vector<FigureRow> figure_rows(const ValuationProfile& valuations);

// Header k,agent,can_win,price_lo,price_hi,welfare; empty cells for agents
// that cannot win; all numbers exact rationals.
std::string figure_csv(const std::vector<FigureRow>& rows);

// Per-auction panels with a grey bar over each agent's price interval and a
// black marker at the winning agent's valuation. Self-contained SVG.
std::string figure_svg(const ValuationProfile& valuations,
                       const std::vector<FigureRow>& rows);

// Writes prefix.csv and prefix.svg. Throws on unwritable paths.
void write_figure(const ValuationProfile& valuations, const std::string& prefix);

}  // namespace kprice::cli

#endif  // KPRICE_TOOLS_FIGURE_HPP_
