#pragma once

#include <span>
#include <vector>

namespace qconcept {

struct WeightedPoint {
  double x;
  double y;
  double weight = 1.0;
};

enum class Monotonicity { increasing, decreasing };

/// Weighted least-squares monotone regression by pool-adjacent-violators.
/// Requires strictly increasing x and positive finite weights (InvalidInput).
std::vector<double> isotonic_fit(std::span<const WeightedPoint> points, Monotonicity direction);

/// Same fit on bare values with the given weights (x is implicit: the index).
std::vector<double> isotonic_fit(std::span<const double> y, std::span<const double> weights,
                                 Monotonicity direction);

} // namespace qconcept
