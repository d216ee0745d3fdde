#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrts/experiment.hpp"

namespace lrts {

/// Mean and sample standard deviation of per-fold means. Folds whose mean is
/// unavailable (no qualifying runs) are left out; `folds` counts the rest.
struct FoldStat {
  std::optional<double> mean;
  std::optional<double> stddev;
  int folds = 0;
};

FoldStat fold_stat(const std::vector<std::optional<double>>& fold_means);

struct SummaryRow {
  Experiment experiment = Experiment::kConvergence;
  Algorithm algorithm = Algorithm::kLrta;
  std::optional<double> gamma;
  std::optional<double> epsilon;
  int lookahead = 1;
  int folds = 0;
  int runs = 0;
  int converged = 0;
  int ratio_coverage = 0;  // runs contributing to the final-ratio column

  FoldStat convergence_cost;  // over converged runs
  FoldStat final_ratio_pct;   // over runs with a known optimum
  FoldStat stored_values;     // over all runs
  FoldStat solved;            // converged runs per fold
  FoldStat iae, ise, itae, itse, sod;
  FoldStat first_trial_cost;  // over all runs

  std::string label() const;
};

/// Groups rows by (experiment, algorithm, gamma, epsilon, lookahead) in
/// order of first appearance, averages each metric within a fold, then
/// reports mean and sample standard deviation across folds.
std::vector<SummaryRow> aggregate(const std::vector<RunRow>& rows);

}  // namespace lrts
