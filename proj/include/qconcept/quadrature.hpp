#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace qconcept {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t intervals = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration of f over the
/// panels delimited by `breaks` (sorted, at least two entries). Intervals
/// with the largest error estimate are bisected until the summed estimate
/// drops to `abs_tol`. Throws QuadratureFailure after `max_intervals`.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::span<const double> breaks, double abs_tol,
                                    std::size_t max_intervals = 200000);

} // namespace qconcept
