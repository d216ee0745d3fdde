#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lrts/aggregate.hpp"

namespace lrts::cli {

/// Mean value (and fold std) of one summary metric, grouped by lookahead.
struct BarSeries {
  std::string label;
  int lookahead = 1;
  double value = 0.0;
  double error = 0.0;
  bool has_error = false;
};

/// Grouped bar chart with a linear y axis starting at zero. Bar height is
/// proportional to value; error bars show one fold standard deviation.
std::string render_bar_chart(const std::string& title, const std::string& y_label,
                             const std::vector<BarSeries>& bars);

/// Writes one SVG per metric present in `rows` and returns their paths.
/// Empty input writes nothing.
std::vector<std::filesystem::path> emit_plots(const std::vector<SummaryRow>& rows,
                                              const std::filesystem::path& out_dir);

}  // namespace lrts::cli
