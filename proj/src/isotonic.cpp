#include "qconcept/isotonic.hpp"

#include <cmath>

#include "qconcept/errors.hpp"

namespace qconcept {

std::vector<double> isotonic_fit(std::span<const double> y, std::span<const double> weights,
                                 Monotonicity direction) {
  if (y.size() != weights.size()) {
    throw InvalidInput("isotonic fit: values and weights differ in length");
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!std::isfinite(y[i])) {
      throw InvalidInput("isotonic fit: values must be finite");
    }
    if (!std::isfinite(weights[i]) || weights[i] <= 0.0) {
      throw InvalidInput("isotonic fit: weights must be finite and > 0");
    }
  }
  const double sign = direction == Monotonicity::increasing ? 1.0 : -1.0;

  // Stack of pooled blocks with their weighted means and sizes.
  struct Block {
    double mean;
    double weight;
    std::size_t count;
  };
  std::vector<Block> blocks;
  blocks.reserve(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    Block cur{sign * y[i], weights[i], 1};
    while (!blocks.empty() && blocks.back().mean >= cur.mean) {
      const Block& prev = blocks.back();
      const double w = prev.weight + cur.weight;
      cur = Block{(prev.mean * prev.weight + cur.mean * cur.weight) / w, w,
                  prev.count + cur.count};
      blocks.pop_back();
    }
    blocks.push_back(cur);
  }

  std::vector<double> fit;
  fit.reserve(y.size());
  for (const Block& b : blocks) {
    fit.insert(fit.end(), b.count, sign * b.mean);
  }
  return fit;
}

std::vector<double> isotonic_fit(std::span<const WeightedPoint> points, Monotonicity direction) {
  std::vector<double> y;
  std::vector<double> w;
  y.reserve(points.size());
  w.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].x) || (i > 0 && !(points[i].x > points[i - 1].x))) {
      throw InvalidInput("isotonic fit: x must be finite and strictly increasing");
    }
    y.push_back(points[i].y);
    w.push_back(points[i].weight);
  }
  return isotonic_fit(y, w, direction);
}

} // namespace qconcept
