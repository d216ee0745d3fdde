#pragma once

#include <span>

namespace lrts {

/// Convergence-stability indices of one instance's trial-cost sequence,
/// summed over trials 1..N where N is the convergence trial:
///   IAE  = sum |c_i - h*|         ISE  = sum (c_i - h*)^2
///   ITAE = sum i * |c_i - h*|     ITSE = sum i * (c_i - h*)^2
///   SOD  = sum_{i<N} max(0, c_{i+1} - c_i)
/// Cross-instance averaging happens during aggregation.
struct StabilityIndices {
  double iae = 0.0;
  double ise = 0.0;
  double itae = 0.0;
  double itse = 0.0;
  double sod = 0.0;
};

/// `costs` holds trials 1..N. Throws std::invalid_argument when empty or
/// when h_star is not positive.
StabilityIndices stability(std::span<const double> costs, double h_star);

}  // namespace lrts
