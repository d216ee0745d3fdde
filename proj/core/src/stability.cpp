#include "lrts/stability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lrts {

StabilityIndices stability(std::span<const double> costs, double h_star) {
  if (costs.empty()) throw std::invalid_argument("stability: empty cost list");
  if (!(h_star > 0.0)) throw std::invalid_argument("stability: h* must be > 0");
  StabilityIndices out;
  for (std::size_t k = 0; k < costs.size(); ++k) {
    const double i = static_cast<double>(k + 1);
    const double err = costs[k] - h_star;
    out.iae += std::abs(err);
    out.ise += err * err;
    out.itae += i * std::abs(err);
    out.itse += i * err * err;
    if (k + 1 < costs.size()) out.sod += std::max(0.0, costs[k + 1] - costs[k]);
  }
  return out;
}

}  // namespace lrts
