#include "qconcept/state_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qconcept/errors.hpp"
#include "qconcept/quadrature.hpp"

namespace qconcept {

GaussianState::GaussianState(double center, double width) : center_(center), width_(width) {
  if (!std::isfinite(center)) {
    throw InvalidParameter("gaussian center must be finite, got " + std::to_string(center));
  }
  if (!std::isfinite(width) || width <= 0.0) {
    throw InvalidParameter("gaussian width must be finite and > 0, got " + std::to_string(width));
  }
}

GaussianState make_gaussian(double center, double width) { return GaussianState(center, width); }

Grid::Grid(double lo, double hi, std::size_t n) : lo_(lo), hi_(hi), n_(n) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw InvalidParameter("grid requires finite lo < hi");
  }
  if (n < 2) {
    throw InvalidParameter("grid requires at least 2 points");
  }
}

double amplitude(const GaussianState& g, double x) {
  const double var = g.width() * g.width();
  const double dx = x - g.center();
  return std::exp(-0.25 * std::log(2.0 * std::numbers::pi * var) - dx * dx / (4.0 * var));
}

double log_overlap(const GaussianState& g1, const GaussianState& g2) {
  const double s1 = g1.width();
  const double s2 = g2.width();
  const double sum_var = s1 * s1 + s2 * s2;
  const double dmu = g1.center() - g2.center();
  // (4 s1^2 s2^2 / S^2)^(1/4) = (2 s1 s2 / S)^(1/2)
  return 0.5 * std::log(2.0 * s1 * s2 / sum_var) - dmu * dmu / (4.0 * sum_var);
}

double overlap(const GaussianState& g1, const GaussianState& g2) {
  return std::exp(log_overlap(g1, g2));
}

double overlap_deficit(const GaussianState& g1, const GaussianState& g2) {
  return -std::expm1(log_overlap(g1, g2));
}

double overlap_quadrature(const GaussianState& g1, const GaussianState& g2, double tol) {
  if (!std::isfinite(tol) || tol <= 0.0) {
    throw InvalidParameter("quadrature tolerance must be > 0");
  }
  const double max_w = std::max(g1.width(), g2.width());
  const double min_w = std::min(g1.width(), g2.width());
  const double lo = std::min(g1.center(), g2.center()) - 10.0 * max_w;
  const double hi = std::max(g1.center(), g2.center()) + 10.0 * max_w;

  // Panels no wider than the narrower state so neither peak can fall
  // between the first round of Kronrod nodes.
  const auto panels = static_cast<std::size_t>(std::ceil((hi - lo) / min_w));
  std::vector<double> breaks;
  breaks.reserve(panels + 3);
  for (std::size_t i = 0; i <= panels; ++i) {
    breaks.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(panels));
  }
  breaks.push_back(g1.center());
  breaks.push_back(g2.center());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const auto integrand = [&](double x) { return amplitude(g1, x) * amplitude(g2, x); };
  return integrate_adaptive(integrand, breaks, tol).value;
}

double fidelity(const GaussianState& g1, const GaussianState& g2) {
  return std::exp(2.0 * log_overlap(g1, g2));
}

double distance(const GaussianState& g1, const GaussianState& g2) {
  return std::sqrt(std::max(0.0, 2.0 * overlap_deficit(g1, g2)));
}

} // namespace qconcept
