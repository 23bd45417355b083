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

#include "render.hpp"

#include <sstream>

namespace kprice::cli {

namespace {

const char* yes_no(bool value) { return value ? "yes" : "no"; }
const char* true_false(bool value) { return value ? "true" : "false"; }

void append_outcome_text(std::ostringstream& out, const Outcome& outcome) {
  out << "winner: agent " << outcome.winner << "\n";
  out << "price: " << outcome.price << "\n";
  for (std::size_t agent = 1; agent <= outcome.utilities.size(); ++agent) {
    out << "utility of agent " << agent << ": " << outcome.utility(agent)
        << "\n";
  }
}

}  // namespace

std::string render_outcome(const Outcome& outcome, Format format) {
  std::ostringstream out;
  if (format == Format::kCsv) {
    out << "winner,price";
    for (std::size_t agent = 1; agent <= outcome.utilities.size(); ++agent) {
      out << ",utility_" << agent;
    }
    out << "\n" << outcome.winner << "," << outcome.price;
    for (const Rational& u : outcome.utilities) out << "," << u;
    out << "\n";
    return out.str();
  }
  append_outcome_text(out, outcome);
  return out.str();
}

std::string render_nash(const NashReport& report, Format format) {
  std::ostringstream out;
  if (format == Format::kCsv) {
    out << "agent,current_utility,sup_deviation_utility,sup_attained,"
           "profitable,witness_bid\n";
    for (const DeviationReport& dev : report.per_agent) {
      out << dev.agent << "," << dev.current_utility << ","
          << dev.sup_deviation_utility << "," << true_false(dev.sup_attained)
          << "," << true_false(dev.profitable) << ",";
      if (dev.witness_bid) out << *dev.witness_bid;
      out << "\n";
    }
    return out.str();
  }
  out << (report.is_equilibrium ? "EQUILIBRIUM" : "NOT EQUILIBRIUM") << "\n";
  append_outcome_text(out, report.outcome);
  out << "\n";
  out << "agent | current utility | sup deviation utility | attained | "
         "profitable | witness bid\n";
  for (const DeviationReport& dev : report.per_agent) {
    out << dev.agent << " | " << dev.current_utility << " | "
        << dev.sup_deviation_utility << " | " << yes_no(dev.sup_attained)
        << " | " << yes_no(dev.profitable) << " | ";
    if (dev.witness_bid) {
      out << *dev.witness_bid;
    } else {
      out << "-";
    }
    out << "\n";
  }
  return out.str();
}

std::string render_outcome_set(const AuctionSpec& spec,
                               const ValuationProfile& valuations,
                               const OutcomeSet& set, Format format) {
  std::ostringstream out;
  if (format == Format::kCsv) {
    out << "k,agent,can_win,price_lo,price_hi,welfare\n";
    const std::string label = rank_label(spec.price_rank());
    for (std::size_t agent = 1; agent <= spec.agent_count(); ++agent) {
      const auto& interval = set.agent_interval(agent);
      out << label << "," << agent << "," << true_false(interval.has_value())
          << ",";
      if (interval) {
        out << interval->lo << "," << interval->hi << ","
            << valuations.value(agent);
      } else {
        out << ",,";
      }
      out << "\n";
    }
    return out.str();
  }
  for (std::size_t agent = 1; agent <= spec.agent_count(); ++agent) {
    const auto& interval = set.agent_interval(agent);
    out << "agent " << agent << ": ";
    if (interval) {
      out << "wins at prices in [" << interval->lo << ", " << interval->hi
          << "]";
    } else {
      out << "cannot win";
    }
    out << "\n";
  }
  out << "revenue interval: [" << set.revenue_interval.lo << ", "
      << set.revenue_interval.hi << "]\n";
  out << "worst-case welfare: " << set.worst_case_welfare << "\n";
  out << "worst-case revenue: " << set.worst_case_revenue << "\n";
  return out.str();
}

std::string render_construction(const BidProfile& bids,
                                const NashReport& verification, Format format) {
  std::ostringstream out;
  if (format == Format::kCsv) {
    out << "agent,bid\n";
    for (std::size_t agent = 1; agent <= bids.size(); ++agent) {
      out << agent << "," << bids.bid(agent) << "\n";
    }
    return out.str();
  }
  out << "bids:";
  for (const Rational& b : bids.bids()) out << " " << b;
  out << "\n";
  out << "verified: "
      << (verification.is_equilibrium ? "EQUILIBRIUM" : "NOT EQUILIBRIUM")
      << "\n";
  append_outcome_text(out, verification.outcome);
  return out.str();
}

std::string render_crosscheck(const CrosscheckReport& report, Format format) {
  std::ostringstream out;
  if (format == Format::kCsv) {
    out << "winner,price\n";
    for (const WinnerPrice& outcome : report.enumerated_outcomes) {
      out << outcome.winner << "," << outcome.price << "\n";
    }
    return out.str();
  }
  out << "profiles examined: " << report.profiles_examined << "\n";
  out << "equilibria found: " << report.equilibria_found << "\n";
  out << "outcomes:";
  if (report.enumerated_outcomes.empty()) out << " none";
  for (const WinnerPrice& outcome : report.enumerated_outcomes) {
    out << " (agent " << outcome.winner << ", price " << outcome.price << ")";
  }
  out << "\n";
  if (report.soundness_violations.empty()) {
    out << "soundness violations: none\n";
  } else {
    out << "soundness violations:\n";
    for (const SoundnessViolation& violation : report.soundness_violations) {
      out << "  (agent " << violation.outcome.winner << ", price "
          << violation.outcome.price << ") outside the characterized set, from"
          << " bids";
      for (const Rational& b : violation.profile.bids()) out << " " << b;
      out << "\n";
    }
  }
  if (report.completeness_misses.empty()) {
    out << "completeness misses: none\n";
  } else {
    out << "completeness misses:\n";
    for (const CompletenessMiss& miss : report.completeness_misses) {
      out << "  (agent " << miss.agent << ", price " << miss.price
          << ") characterized but not enumerated\n";
    }
  }
  out << "verdict: " << (report.clean() ? "CLEAN" : "DIRTY") << "\n";
  return out.str();
}

std::string rank_label(std::size_t price_rank) {
  return price_rank == 1 ? "first" : std::to_string(price_rank);
}

}  // namespace kprice::cli
