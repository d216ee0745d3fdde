#include "plots.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace lrts::cli {

namespace {

std::string fixed(double v, int precision = 2) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
  return std::string(buf, end);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                    "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
                                    "#9c755f", "#bab0ac"};

constexpr double kBarWidth = 28.0;
constexpr double kGroupGap = 24.0;
constexpr double kPlotHeight = 300.0;
constexpr double kLeft = 80.0;
constexpr double kTop = 50.0;

}  // namespace

std::string render_bar_chart(const std::string& title, const std::string& y_label,
                             const std::vector<BarSeries>& bars) {
  std::vector<std::string> labels;
  std::vector<int> lookaheads;
  for (const BarSeries& b : bars) {
    if (std::find(labels.begin(), labels.end(), b.label) == labels.end()) labels.push_back(b.label);
    if (std::find(lookaheads.begin(), lookaheads.end(), b.lookahead) == lookaheads.end()) {
      lookaheads.push_back(b.lookahead);
    }
  }
  std::sort(lookaheads.begin(), lookaheads.end());

  double y_max = 0.0;
  for (const BarSeries& b : bars) {
    y_max = std::max(y_max, b.value + (b.has_error ? b.error : 0.0));
  }
  if (y_max <= 0.0) y_max = 1.0;

  const double group_width = static_cast<double>(labels.size()) * kBarWidth;
  const double plot_width =
      static_cast<double>(lookaheads.size()) * (group_width + kGroupGap) + kGroupGap;
  const double legend_height = 18.0 * static_cast<double>(labels.size());
  const double width = kLeft + plot_width + 20.0;
  const double height = kTop + kPlotHeight + 50.0 + legend_height;
  const double base_y = kTop + kPlotHeight;
  auto y_of = [&](double v) { return base_y - v / y_max * kPlotHeight; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width)
      << "\" height=\"" << fixed(height) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<text x=\"" << fixed(width / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(title) << "</text>\n";
  svg << "<text x=\"16\" y=\"" << fixed(kTop + kPlotHeight / 2)
      << "\" transform=\"rotate(-90 16 " << fixed(kTop + kPlotHeight / 2)
      << ")\" text-anchor=\"middle\">" << escape(y_label) << "</text>\n";
  for (int tick = 0; tick <= 4; ++tick) {
    const double v = y_max * tick / 4.0;
    svg << "<line x1=\"" << fixed(kLeft) << "\" x2=\"" << fixed(kLeft + plot_width) << "\" y1=\""
        << fixed(y_of(v)) << "\" y2=\"" << fixed(y_of(v)) << "\" stroke=\"#ddd\"/>\n";
    svg << "<text x=\"" << fixed(kLeft - 6) << "\" y=\"" << fixed(y_of(v) + 4)
        << "\" text-anchor=\"end\">" << fixed(v) << "</text>\n";
  }

  for (std::size_t g = 0; g < lookaheads.size(); ++g) {
    const double gx = kLeft + kGroupGap + static_cast<double>(g) * (group_width + kGroupGap);
    svg << "<text x=\"" << fixed(gx + group_width / 2) << "\" y=\"" << fixed(base_y + 16)
        << "\" text-anchor=\"middle\">lookahead " << lookaheads[g] << "</text>\n";
    for (std::size_t k = 0; k < labels.size(); ++k) {
      auto it = std::find_if(bars.begin(), bars.end(), [&](const BarSeries& b) {
        return b.label == labels[k] && b.lookahead == lookaheads[g];
      });
      if (it == bars.end()) continue;
      const double x = gx + static_cast<double>(k) * kBarWidth;
      const double h = it->value / y_max * kPlotHeight;
      svg << "<rect class=\"bar\" data-label=\"" << escape(it->label) << "\" x=\"" << fixed(x + 2)
          << "\" y=\"" << fixed(base_y - h, 6) << "\" width=\"" << fixed(kBarWidth - 4)
          << "\" height=\"" << fixed(h, 6) << "\" fill=\"" << kPalette[k % std::size(kPalette)]
          << "\"/>\n";
      if (it->has_error) {
        const double cx = x + kBarWidth / 2;
        const double lo = y_of(std::max(0.0, it->value - it->error));
        const double hi = y_of(it->value + it->error);
        svg << "<path class=\"error\" d=\"M" << fixed(cx) << ' ' << fixed(lo) << " V" << fixed(hi)
            << " M" << fixed(cx - 5) << ' ' << fixed(hi) << " H" << fixed(cx + 5) << " M"
            << fixed(cx - 5) << ' ' << fixed(lo) << " H" << fixed(cx + 5)
            << "\" stroke=\"#222\" fill=\"none\"/>\n";
      }
      svg << "<text x=\"" << fixed(x + kBarWidth / 2) << "\" y=\"" << fixed(base_y - h - 4)
          << "\" text-anchor=\"middle\" font-size=\"9\">" << fixed(it->value, 1) << "</text>\n";
    }
  }
  svg << "<line x1=\"" << fixed(kLeft) << "\" x2=\"" << fixed(kLeft + plot_width) << "\" y1=\""
      << fixed(base_y) << "\" y2=\"" << fixed(base_y) << "\" stroke=\"#000\"/>\n";

  for (std::size_t k = 0; k < labels.size(); ++k) {
    const double ly = base_y + 34 + 18.0 * static_cast<double>(k);
    svg << "<rect x=\"" << fixed(kLeft) << "\" y=\"" << fixed(ly - 10) << "\" width=\"12\" height=\"12\" fill=\""
        << kPalette[k % std::size(kPalette)] << "\"/>\n";
    svg << "<text x=\"" << fixed(kLeft + 18) << "\" y=\"" << fixed(ly) << "\">" << escape(labels[k])
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::vector<std::filesystem::path> emit_plots(const std::vector<SummaryRow>& rows,
                                              const std::filesystem::path& out_dir) {
  struct Chart {
    const char* file;
    const char* title;
    const char* y_label;
    std::function<bool(const SummaryRow&)> applies;
    FoldStat SummaryRow::*metric;
  };
  auto learning = [](const SummaryRow& r) {
    return r.experiment == Experiment::kConvergence || r.experiment == Experiment::kStability;
  };
  const std::vector<Chart> charts = {
      {"convergence_cost.svg", "Convergence cost", "actions until convergence", learning,
       &SummaryRow::convergence_cost},
      {"final_ratio.svg", "Final solution cost", "% of optimal", learning,
       &SummaryRow::final_ratio_pct},
      {"solved_within_memory.svg", "Instances converged within the memory limit",
       "instances", [](const SummaryRow& r) { return r.experiment == Experiment::kMemory; },
       &SummaryRow::solved},
      {"memory_final_ratio.svg", "Final solution cost (memory experiment)", "% of optimal",
       [](const SummaryRow& r) { return r.experiment == Experiment::kMemory; },
       &SummaryRow::final_ratio_pct},
      {"iae.svg", "IAE stability index", "IAE", learning, &SummaryRow::iae},
      {"sod.svg", "SOD stability index", "SOD", learning, &SummaryRow::sod},
      {"first_trial_cost.svg", "First-trial solution cost", "actions",
       [](const SummaryRow& r) { return r.experiment == Experiment::kFirstTrial; },
       &SummaryRow::first_trial_cost},
  };

  std::vector<std::filesystem::path> written;
  if (rows.empty()) return written;
  std::filesystem::create_directories(out_dir);
  for (const Chart& chart : charts) {
    std::vector<BarSeries> bars;
    for (const SummaryRow& r : rows) {
      if (!chart.applies(r)) continue;
      const FoldStat& st = r.*(chart.metric);
      if (!st.mean) continue;
      BarSeries b{r.label(), r.lookahead, *st.mean, st.stddev.value_or(0.0),
                  st.folds > 1 && st.stddev.has_value()};
      bars.push_back(b);
    }
    if (bars.empty()) continue;
    const auto path = out_dir / chart.file;
    std::ofstream out(path, std::ios::binary);
    out << render_bar_chart(chart.title, chart.y_label, bars);
    written.push_back(path);
  }
  return written;
}

}  // namespace lrts::cli
