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

#include "figure.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "problem_io.hpp"
#include "render.hpp"

namespace kprice::cli {

namespace {

// Fixed two-decimal coordinates keep the SVG byte-identical across runs and
// platforms.
std::string fmt(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << value;
  return out.str();
}

std::string panel_title(std::size_t price_rank, std::size_t n) {
  if (price_rank == 1) return "first-price auction";
  if (price_rank == 2) return "second-price auction (k = 2)";
  if (price_rank == n) return "lowest-price auction (k = " + std::to_string(n) + ")";
  return "k = " + std::to_string(price_rank);
}

}  // namespace

std::vector<FigureRow> figure_rows(const ValuationProfile& valuations) {
  const std::size_t n = valuations.size();
  std::vector<FigureRow> rows;
  rows.reserve(n * n);
  for (std::size_t canonical = 2; canonical <= n + 1; ++canonical) {
    const std::size_t k = canonical == n + 1 ? 1 : canonical;
    const OutcomeSet set = winner_price_set(AuctionSpec(n, k), valuations);
    for (std::size_t agent = 1; agent <= n; ++agent) {
      FigureRow row;
      row.k_label = rank_label(k);
      row.agent = agent;
      const auto& interval = set.agent_interval(agent);
      row.can_win = interval.has_value();
      if (interval) {
        row.prices = *interval;
        row.welfare = valuations.value(agent);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string figure_csv(const std::vector<FigureRow>& rows) {
  std::ostringstream out;
  out << "k,agent,can_win,price_lo,price_hi,welfare\n";
  for (const FigureRow& row : rows) {
    out << row.k_label << "," << row.agent << ","
        << (row.can_win ? "true" : "false") << ",";
    if (row.can_win) {
      out << row.prices->lo << "," << row.prices->hi << "," << *row.welfare;
    } else {
      out << ",,";
    }
    out << "\n";
  }
  return out.str();
}

std::string figure_svg(const ValuationProfile& valuations,
                       const std::vector<FigureRow>& rows) {
  const std::size_t n = valuations.size();
  const double x_max = valuations.value(1).to_double() * 1.06;

  const double label_w = 120.0;
  const double plot_w = 560.0;
  const double right_pad = 24.0;
  const double width = label_w + plot_w + right_pad;

  const double legend_h = 34.0;
  const double title_h = 20.0;
  const double row_h = 22.0;
  const double panel_pad = 12.0;
  const double panel_h = title_h + n * row_h + panel_pad;
  const double axis_h = 36.0;
  const double height = legend_h + n * panel_h + axis_h;

  const auto x_of = [&](double value) {
    return label_w + plot_w * (value / x_max);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width)
      << " " << fmt(height) << "\" font-family=\"Helvetica, Arial, sans-serif\""
      << " font-size=\"12\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" fill=\"#ffffff\"/>\n";

  // Legend.
  svg << "<rect x=\"" << fmt(label_w) << "\" y=\"10\" width=\"26\" height=\"8\""
      << " fill=\"#b0b0b0\"/>\n";
  svg << "<text x=\"" << fmt(label_w + 32) << "\" y=\"18\" fill=\"#333333\">"
      << "equilibrium price range</text>\n";
  svg << "<rect x=\"" << fmt(label_w + 210) << "\" y=\"6\" width=\"3\""
      << " height=\"16\" fill=\"#111111\"/>\n";
  svg << "<text x=\"" << fmt(label_w + 220) << "\" y=\"18\" fill=\"#333333\">"
      << "winner valuation (welfare)</text>\n";

  // Axis gridlines at 0 and every valuation, spanning all panels.
  const double grid_top = legend_h;
  const double grid_bottom = legend_h + n * panel_h;
  std::vector<Rational> ticks;
  ticks.emplace_back(0);
  for (std::size_t i = n; i >= 1; --i) ticks.push_back(valuations.value(i));
  for (const Rational& tick : ticks) {
    const double x = x_of(tick.to_double());
    svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(grid_top) << "\" x2=\""
        << fmt(x) << "\" y2=\"" << fmt(grid_bottom)
        << "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(grid_bottom + 16)
        << "\" fill=\"#333333\" text-anchor=\"middle\">" << tick.to_string()
        << "</text>\n";
  }
  svg << "<text x=\"" << fmt(label_w + plot_w / 2) << "\" y=\""
      << fmt(grid_bottom + 32)
      << "\" fill=\"#333333\" text-anchor=\"middle\">bid / value</text>\n";

  // Panels, in dataset order: n rows per auction.
  std::size_t panel_index = 0;
  for (std::size_t offset = 0; offset + n <= rows.size(); offset += n) {
    const double panel_top = legend_h + panel_index * panel_h;
    const std::string& label = rows[offset].k_label;
    const std::size_t price_rank =
        label == "first" ? 1 : static_cast<std::size_t>(std::stoul(label));
    svg << "<text x=\"8\" y=\"" << fmt(panel_top + 14)
        << "\" fill=\"#111111\" font-weight=\"bold\">"
        << panel_title(price_rank, n) << "</text>\n";
    for (std::size_t r = 0; r < n; ++r) {
      const FigureRow& row = rows[offset + r];
      const double yc = panel_top + title_h + (r + 0.5) * row_h;
      svg << "<text x=\"8\" y=\"" << fmt(yc + 4)
          << "\" fill=\"#333333\">agent " << row.agent << "</text>\n";
      if (!row.can_win) {
        svg << "<text x=\"" << fmt(label_w) << "\" y=\"" << fmt(yc + 4)
            << "\" fill=\"#bbbbbb\">cannot win</text>\n";
        continue;
      }
      const double lo = x_of(row.prices->lo.to_double());
      const double hi = x_of(row.prices->hi.to_double());
      svg << "<rect x=\"" << fmt(lo) << "\" y=\"" << fmt(yc - 4) << "\" width=\""
          << fmt(hi - lo < 1.0 ? 1.0 : hi - lo)
          << "\" height=\"8\" fill=\"#b0b0b0\"/>\n";
      const double w = x_of(row.welfare->to_double());
      svg << "<rect x=\"" << fmt(w - 1.5) << "\" y=\"" << fmt(yc - 8)
          << "\" width=\"3\" height=\"16\" fill=\"#111111\"/>\n";
    }
    ++panel_index;
  }

  svg << "</svg>\n";
  return svg.str();
}

void write_figure(const ValuationProfile& valuations,
                  const std::string& prefix) {
  const std::vector<FigureRow> rows = figure_rows(valuations);
  const std::string csv_path = prefix + ".csv";
  const std::string svg_path = prefix + ".svg";
  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) throw ParseError("cannot write " + csv_path);
  csv << figure_csv(rows);
  if (!csv.good()) throw ParseError("cannot write " + csv_path);
  std::ofstream svg(svg_path, std::ios::binary);
  if (!svg) throw ParseError("cannot write " + svg_path);
  svg << figure_svg(valuations, rows);
  if (!svg.good()) throw ParseError("cannot write " + svg_path);
}

}  // namespace kprice::cli
