#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrts/aggregate.hpp"
#include "lrts/experiment.hpp"

namespace lrts {

/// Shortest round-trip decimal text in fixed notation, independent of the
/// global locale.
std::string format_number(double value);

/// Column order of the per-run CSV.
const std::vector<std::string>& run_csv_header();
const std::vector<std::string>& summary_csv_header();

void write_runs_csv(std::ostream& out, const std::vector<RunRow>& rows);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

/// Plain comma-separated table (no quoting; none of our fields need it).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index by name; throws std::out_of_range if absent.
  std::size_t column(std::string_view name) const;
};

CsvTable read_csv(std::istream& in);

std::vector<SummaryRow> parse_summary(const CsvTable& table);

}  // namespace lrts
