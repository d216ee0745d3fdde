#include "lrts/aggregate.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <tuple>

namespace lrts {

FoldStat fold_stat(const std::vector<std::optional<double>>& fold_means) {
  FoldStat out;
  double sum = 0.0;
  for (const auto& m : fold_means) {
    if (!m) continue;
    sum += *m;
    ++out.folds;
  }
  if (out.folds == 0) return out;
  const double mean = sum / out.folds;
  double sq = 0.0;
  for (const auto& m : fold_means) {
    if (m) sq += (*m - mean) * (*m - mean);
  }
  out.mean = mean;
  out.stddev = out.folds > 1 ? std::sqrt(sq / (out.folds - 1)) : 0.0;
  return out;
}

std::string SummaryRow::label() const {
  AgentConfig c;
  c.algorithm = algorithm;
  c.gamma = gamma.value_or(1.0);
  c.epsilon = epsilon.value_or(0.0);
  return c.label();
}

namespace {

using Metric = std::function<std::optional<double>(const RunRow&)>;

// Per-fold mean of `metric` over rows where it is present.
FoldStat summarize(const std::vector<std::vector<const RunRow*>>& by_fold,
                   const Metric& metric) {
  std::vector<std::optional<double>> means;
  for (const auto& fold : by_fold) {
    double sum = 0.0;
    int n = 0;
    for (const RunRow* r : fold) {
      if (auto v = metric(*r)) {
        sum += *v;
        ++n;
      }
    }
    means.push_back(n ? std::optional<double>(sum / n) : std::nullopt);
  }
  return fold_stat(means);
}

}  // namespace

std::vector<SummaryRow> aggregate(const std::vector<RunRow>& rows) {
  using Key = std::tuple<int, int, double, double, int>;
  std::vector<Key> order;
  std::map<Key, std::map<int, std::vector<const RunRow*>>> groups;
  for (const RunRow& r : rows) {
    Key key{static_cast<int>(r.experiment), static_cast<int>(r.algorithm),
            r.gamma.value_or(-1.0), r.epsilon.value_or(-1.0), r.lookahead};
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second[r.fold].push_back(&r);
  }

  std::vector<SummaryRow> out;
  for (const Key& key : order) {
    const auto& folds = groups.at(key);
    std::vector<std::vector<const RunRow*>> by_fold;
    for (const auto& [fold, rs] : folds) by_fold.push_back(rs);
    const RunRow& first = *by_fold.front().front();

    SummaryRow s;
    s.experiment = first.experiment;
    s.algorithm = first.algorithm;
    s.gamma = first.gamma;
    s.epsilon = first.epsilon;
    s.lookahead = first.lookahead;
    s.folds = static_cast<int>(by_fold.size());
    for (const auto& fold : by_fold) {
      for (const RunRow* r : fold) {
        ++s.runs;
        if (r->converged_at) ++s.converged;
        if (r->final_ratio_pct) ++s.ratio_coverage;
      }
    }

    auto when_converged = [](double RunRow::*field) -> Metric {
      return [field](const RunRow& r) -> std::optional<double> {
        if (!r.converged_at) return std::nullopt;
        return r.*field;
      };
    };
    auto index = [](double StabilityIndices::*field) -> Metric {
      return [field](const RunRow& r) -> std::optional<double> {
        if (!r.indices) return std::nullopt;
        return (*r.indices).*field;
      };
    };

    s.convergence_cost = summarize(by_fold, when_converged(&RunRow::convergence_cost));
    s.final_ratio_pct = summarize(by_fold, [](const RunRow& r) { return r.final_ratio_pct; });
    s.stored_values = summarize(by_fold, [](const RunRow& r) -> std::optional<double> {
      return static_cast<double>(r.stored_values);
    });
    {
      std::vector<std::optional<double>> counts;
      for (const auto& fold : by_fold) {
        int n = 0;
        for (const RunRow* r : fold) n += r->converged_at ? 1 : 0;
        counts.emplace_back(static_cast<double>(n));
      }
      s.solved = fold_stat(counts);
    }
    s.iae = summarize(by_fold, index(&StabilityIndices::iae));
    s.ise = summarize(by_fold, index(&StabilityIndices::ise));
    s.itae = summarize(by_fold, index(&StabilityIndices::itae));
    s.itse = summarize(by_fold, index(&StabilityIndices::itse));
    s.sod = summarize(by_fold, index(&StabilityIndices::sod));
    s.first_trial_cost = summarize(by_fold, [](const RunRow& r) -> std::optional<double> {
      return r.first_trial_cost;
    });
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace lrts
