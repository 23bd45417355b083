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

// kprice: k-price sealed-bid auctions under complete information — run the
// mechanism, verify equilibria exactly, construct equilibria for target
// outcomes, print the closed-form outcome characterization, and cross-check
// it by grid enumeration.
//
// Exit codes: 0 success (and: the profile is an equilibrium / the cross-check
// is clean); 1 parse or I/O failure; 2 precondition violation; 3 verified
// not-an-equilibrium or a dirty cross-check; 4 enumeration budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "figure.hpp"
#include "kprice/construct.hpp"
#include "kprice/oracle.hpp"
#include "problem_io.hpp"
#include "render.hpp"

namespace {

using namespace kprice;
using namespace kprice::cli;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitNegative = 3;  // not an equilibrium / dirty cross-check
constexpr int kExitBudget = 4;

Format parse_format(const std::string& name) {
  return name == "csv" ? Format::kCsv : Format::kText;
}

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
  if (auto parsed = Rational::parse(text)) return *parsed;
  throw ParseError("flag " + flag + ": \"" + text +
                   "\" is not an integer or \"num/den\" rational");
}

const BidProfile& require_bids(const Problem& problem) {
  if (!problem.bids) {
    throw ParseError("field bids: required by this command but absent");
  }
  return *problem.bids;
}

int cmd_run(const std::string& path, const std::string& format) {
  const Problem problem = load_problem(path);
  const Outcome outcome =
      run_auction(problem.spec, problem.valuations, require_bids(problem));
  std::cout << render_outcome(outcome, parse_format(format));
  return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& format) {
  const Problem problem = load_problem(path);
  const NashReport report =
      is_nash(problem.spec, problem.valuations, require_bids(problem));
  std::cout << render_nash(report, parse_format(format));
  return report.is_equilibrium ? kExitOk : kExitNegative;
}

int cmd_construct(const std::string& path, std::size_t winner,
                  const std::string& price_text, bool robust,
                  const std::string& out_path, const std::string& format) {
  const Problem problem = load_problem(path);
  const Rational price = parse_rational_flag(price_text, "--price");
  const BidProfile bids =
      robust ? construct_robust_variant(problem.spec, problem.valuations,
                                        winner, price)
             : construct_winner(problem.spec, problem.valuations, winner,
                                price);
  const NashReport verification =
      is_nash(problem.spec, problem.valuations, bids);
  std::cout << render_construction(bids, verification, parse_format(format));
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + out_path);
    out << problem_to_json(problem.spec, problem.valuations, &bids);
    if (!out.good()) throw ParseError("cannot write " + out_path);
  }
  return kExitOk;
}

int cmd_characterize(const std::string& path, bool all_k,
                     const std::string& format) {
  const Problem problem = load_problem(path);
  const Format fmt = parse_format(format);
  const std::size_t n = problem.spec.agent_count();
  if (!all_k) {
    const OutcomeSet set = winner_price_set(problem.spec, problem.valuations);
    std::cout << render_outcome_set(problem.spec, problem.valuations, set,
                                    fmt);
    return kExitOk;
  }
  // All auctions over these valuations, in canonical order, first price last.
  bool first_block = true;
  for (std::size_t canonical = 2; canonical <= n + 1; ++canonical) {
    const std::size_t k = canonical == n + 1 ? 1 : canonical;
    const AuctionSpec spec(n, k);
    const OutcomeSet set = winner_price_set(spec, problem.valuations);
    std::string rendered =
        render_outcome_set(spec, problem.valuations, set, fmt);
    if (fmt == Format::kCsv && !first_block) {
      rendered.erase(0, rendered.find('\n') + 1);  // keep one shared header
    }
    if (fmt == Format::kText) {
      if (!first_block) std::cout << "\n";
      std::cout << "== k = " << rank_label(k) << " ==\n";
    }
    std::cout << rendered;
    first_block = false;
  }
  return kExitOk;
}

int cmd_enumerate(const std::string& path, const std::string& grid_text,
                  bool grid_default, std::uint64_t budget,
                  const std::string& format) {
  const Problem problem = load_problem(path);
  if (grid_default != grid_text.empty()) {
    throw ParseError(
        "exactly one of --grid and --grid-default must be given");
  }
  const GridSpec grid = grid_default
                            ? default_grid(problem.valuations)
                            : GridSpec(parse_rational_list(grid_text));
  const CrosscheckReport report =
      crosscheck(problem.spec, problem.valuations, grid, budget);
  std::cout << render_crosscheck(report, parse_format(format));
  return report.clean() ? kExitOk : kExitNegative;
}

int cmd_figure(const std::string& path, const std::string& prefix) {
  const Problem problem = load_problem(path);
  write_figure(problem.valuations, prefix);
  std::cout << "wrote " << prefix << ".csv and " << prefix << ".svg\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "k-price sealed-bid auctions under complete information: mechanism, "
      "exact equilibrium verification, construction, characterization, and "
      "grid enumeration"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  std::size_t winner = 0;
  std::string price_text;
  bool robust = false;
  std::string out_path;
  bool all_k = false;
  std::string grid_text;
  bool grid_default = false;
  std::uint64_t budget = kDefaultProfileBudget;
  std::string prefix;

  const auto add_file = [&path](CLI::App* cmd) {
    cmd->add_option("file", path, "problem file (JSON)")->required();
  };
  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: text or csv")
        ->check(CLI::IsMember({"text", "csv"}));
  };

  CLI::App* run = app.add_subcommand(
      "run", "run the auction on the file's bid profile");
  add_file(run);
  add_format(run);

  CLI::App* verify = app.add_subcommand(
      "verify",
      "verify the file's bid profile as a pure-strategy Nash equilibrium");
  add_file(verify);
  add_format(verify);

  CLI::App* construct = app.add_subcommand(
      "construct", "construct an equilibrium with a chosen winner and price");
  add_file(construct);
  construct->add_option("--winner", winner, "agent that must win (1-based)")
      ->required();
  construct->add_option("--price", price_text, "price the winner must pay")
      ->required();
  construct->add_flag("--robust", robust,
                      "raise the winning bid so no maximal-bid tie occurs");
  construct->add_option("--out", out_path,
                        "also write a problem file with the constructed bids");
  add_format(construct);

  CLI::App* characterize = app.add_subcommand(
      "characterize", "print the closed-form equilibrium outcome set");
  add_file(characterize);
  characterize->add_flag("--all-k", all_k, "characterize every price rank");
  add_format(characterize);

  CLI::App* enumerate = app.add_subcommand(
      "enumerate",
      "enumerate grid equilibria and cross-check the characterization");
  add_file(enumerate);
  enumerate->add_option("--grid", grid_text,
                        "comma-separated candidate bids, e.g. 0,1/2,1");
  enumerate->add_flag("--grid-default", grid_default,
                      "use 0, the valuations, their midpoints, and v_1 + 1");
  enumerate->add_option("--budget", budget,
                        "maximum number of profiles to examine");
  add_format(enumerate);

  CLI::App* figure = app.add_subcommand(
      "figure", "emit the outcome dataset (CSV) and chart (SVG) for all k");
  add_file(figure);
  figure->add_option("--out", prefix, "output path prefix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (run->parsed()) return cmd_run(path, format);
    if (verify->parsed()) return cmd_verify(path, format);
    if (construct->parsed()) {
      return cmd_construct(path, winner, price_text, robust, out_path, format);
    }
    if (characterize->parsed()) return cmd_characterize(path, all_k, format);
    if (enumerate->parsed()) {
      return cmd_enumerate(path, grid_text, grid_default, budget, format);
    }
    if (figure->parsed()) return cmd_figure(path, prefix);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
