#include "lrts/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace lrts {

std::string format_number(double value) {
  if (value == 0.0) return "0";  // also folds -0
  char buf[400];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

namespace {

std::string opt(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

std::string opt(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

void write_line(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << fields[i];
  }
  out << '\n';
}

const std::vector<std::string> kSummaryMetrics = {
    "convergence_cost", "final_ratio_pct", "stored_values", "solved", "iae",
    "ise", "itae", "itse", "sod", "first_trial_cost"};

std::optional<double> parse_opt_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::runtime_error("not a number: '" + s + "'");
  }
  return v;
}

int parse_int(const std::string& s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::runtime_error("not an integer: '" + s + "'");
  }
  return v;
}

}  // namespace

const std::vector<std::string>& run_csv_header() {
  static const std::vector<std::string> header = {
      "experiment", "algorithm", "param_gamma", "param_epsilon", "lookahead",
      "fold", "instance_id", "seed", "converged_at", "convergence_cost",
      "final_cost", "optimal_cost", "final_ratio_pct", "stored_values", "iae",
      "ise", "itae", "itse", "sod", "limit_hit", "trials", "first_trial_cost"};
  return header;
}

const std::vector<std::string>& summary_csv_header() {
  static const std::vector<std::string> header = [] {
    std::vector<std::string> h = {"experiment", "algorithm", "label",
                                  "param_gamma", "param_epsilon", "lookahead",
                                  "folds", "runs", "converged", "ratio_coverage"};
    for (const auto& m : kSummaryMetrics) {
      h.push_back(m + "_mean");
      h.push_back(m + "_std");
    }
    return h;
  }();
  return header;
}

void write_runs_csv(std::ostream& out, const std::vector<RunRow>& rows) {
  write_line(out, run_csv_header());
  for (const RunRow& r : rows) {
    const auto idx = [&](double StabilityIndices::*f) {
      return r.indices ? format_number((*r.indices).*f) : std::string();
    };
    write_line(out, {std::string(to_string(r.experiment)),
                     std::string(to_string(r.algorithm)),
                     opt(r.gamma),
                     opt(r.epsilon),
                     std::to_string(r.lookahead),
                     std::to_string(r.fold),
                     std::to_string(r.instance_id),
                     std::to_string(r.seed),
                     opt(r.converged_at),
                     format_number(r.convergence_cost),
                     format_number(r.final_cost),
                     opt(r.optimal_cost),
                     opt(r.final_ratio_pct),
                     std::to_string(r.stored_values),
                     idx(&StabilityIndices::iae),
                     idx(&StabilityIndices::ise),
                     idx(&StabilityIndices::itae),
                     idx(&StabilityIndices::itse),
                     idx(&StabilityIndices::sod),
                     r.limit_hit ? std::string(to_string(*r.limit_hit)) : std::string(),
                     std::to_string(r.trials),
                     format_number(r.first_trial_cost)});
  }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  write_line(out, summary_csv_header());
  for (const SummaryRow& s : rows) {
    std::vector<std::string> f = {std::string(to_string(s.experiment)),
                                  std::string(to_string(s.algorithm)),
                                  s.label(),
                                  opt(s.gamma),
                                  opt(s.epsilon),
                                  std::to_string(s.lookahead),
                                  std::to_string(s.folds),
                                  std::to_string(s.runs),
                                  std::to_string(s.converged),
                                  std::to_string(s.ratio_coverage)};
    for (const FoldStat* st :
         {&s.convergence_cost, &s.final_ratio_pct, &s.stored_values, &s.solved,
          &s.iae, &s.ise, &s.itae, &s.itse, &s.sod, &s.first_trial_cost}) {
      f.push_back(opt(st->mean));
      f.push_back(opt(st->stddev));
    }
    write_line(out, f);
  }
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("CSV has no column '" + std::string(name) + "'");
}

CsvTable read_csv(std::istream& in) {
  auto split = [](const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return fields;
  };
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  table.header = split(line);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split(line);
    if (fields.size() != table.header.size()) {
      throw std::runtime_error("CSV line " + std::to_string(line_no) + ": expected " +
                               std::to_string(table.header.size()) + " fields, found " +
                               std::to_string(fields.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  return table;
}

std::vector<SummaryRow> parse_summary(const CsvTable& table) {
  std::vector<SummaryRow> out;
  for (const auto& row : table.rows) {
    auto get = [&](std::string_view name) -> const std::string& {
      return row[table.column(name)];
    };
    SummaryRow s;
    auto e = parse_experiment(get("experiment"));
    auto a = parse_algorithm(get("algorithm"));
    if (!e || !a) throw std::runtime_error("summary CSV: unknown experiment or algorithm");
    s.experiment = *e;
    s.algorithm = *a;
    s.gamma = parse_opt_double(get("param_gamma"));
    s.epsilon = parse_opt_double(get("param_epsilon"));
    s.lookahead = parse_int(get("lookahead"));
    s.folds = parse_int(get("folds"));
    s.runs = parse_int(get("runs"));
    s.converged = parse_int(get("converged"));
    s.ratio_coverage = parse_int(get("ratio_coverage"));
    FoldStat* stats[] = {&s.convergence_cost, &s.final_ratio_pct, &s.stored_values,
                         &s.solved, &s.iae, &s.ise, &s.itae, &s.itse, &s.sod,
                         &s.first_trial_cost};
    for (std::size_t m = 0; m < kSummaryMetrics.size(); ++m) {
      stats[m]->mean = parse_opt_double(get(kSummaryMetrics[m] + "_mean"));
      stats[m]->stddev = parse_opt_double(get(kSummaryMetrics[m] + "_std"));
      stats[m]->folds = stats[m]->mean ? s.folds : 0;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace lrts
