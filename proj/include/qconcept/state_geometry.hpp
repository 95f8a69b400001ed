#pragma once

#include <cstddef>

namespace qconcept {

/// Normalized real Gaussian wavefunction
///
///   psi(x) = (2 pi sigma^2)^(-1/4) exp(-(x - mu)^2 / (4 sigma^2))
///
/// so that |psi|^2 is a normal density with standard deviation sigma. This
/// is the convention under which the closed-form overlap below holds.
class GaussianState {
public:
  /// Throws InvalidParameter unless center is finite and width is finite and > 0.
  GaussianState(double center, double width);

  double center() const noexcept { return center_; }
  double width() const noexcept { return width_; }

  /// Exact parameter equality.
  friend bool operator==(const GaussianState&, const GaussianState&) = default;

private:
  double center_;
  double width_;
};

GaussianState make_gaussian(double center, double width);

/// Uniformly spaced sample points lo = x_0 < ... < x_{n-1} = hi.
class Grid {
public:
  Grid(double lo, double hi, std::size_t n);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  std::size_t size() const noexcept { return n_; }
  double spacing() const noexcept { return (hi_ - lo_) / static_cast<double>(n_ - 1); }
  double point(std::size_t i) const noexcept {
    return lo_ + ((hi_ - lo_) * static_cast<double>(i)) / static_cast<double>(n_ - 1);
  }

  friend bool operator==(const Grid&, const Grid&) = default;

private:
  double lo_;
  double hi_;
  std::size_t n_;
};

double amplitude(const GaussianState& g, double x);

/// log <g1|g2>; finite for every pair of valid states.
double log_overlap(const GaussianState& g1, const GaussianState& g2);

/// Closed-form <g1|g2> in (0, 1]; exactly symmetric and exactly 1 for equal states.
double overlap(const GaussianState& g1, const GaussianState& g2);

/// 1 - <g1|g2>, accurate when the states are nearly identical.
double overlap_deficit(const GaussianState& g1, const GaussianState& g2);

/// Adaptive Gauss-Kronrod evaluation of the overlap integral with absolute
/// error <= tol. Throws QuadratureFailure if the subdivision cap is hit.
double overlap_quadrature(const GaussianState& g1, const GaussianState& g2, double tol);

/// Squared overlap |<g1|g2>|^2.
double fidelity(const GaussianState& g1, const GaussianState& g2);

/// Hilbert distance ||g1 - g2|| = sqrt(2 - 2 <g1|g2>).
double distance(const GaussianState& g1, const GaussianState& g2);

} // namespace qconcept
