#pragma once

#include <span>
#include <vector>

#include "qconcept/state_geometry.hpp"

namespace qconcept {

/// Dense symmetric matrix of pairwise overlaps, row-major.
class GramMatrix {
public:
  explicit GramMatrix(std::span<const GaussianState> basis);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

private:
  std::size_t n_;
  std::vector<double> entries_;
};

GramMatrix gram_matrix(std::span<const GaussianState> basis);

/// Real linear combination sum_i c_i psi_i over pairwise-distinct Gaussian
/// basis states. A combination produced by combine() carries a normalized
/// flag; the flag is trusted by distance_lc, which otherwise verifies the
/// norm numerically.
class LinearCombination {
public:
  LinearCombination(std::vector<double> coefficients, std::vector<GaussianState> basis,
                    bool normalized = false);

  /// The single state g with coefficient 1 (normalized).
  explicit LinearCombination(const GaussianState& g);

  const std::vector<double>& coefficients() const noexcept { return coefficients_; }
  const std::vector<GaussianState>& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }
  bool normalized() const noexcept { return normalized_; }

  /// a*u + b*v with the bases merged by exact parameter equality.
  static LinearCombination affine(double a, const LinearCombination& u, double b,
                                  const LinearCombination& v);

private:
  std::vector<double> coefficients_;
  std::vector<GaussianState> basis_;
  bool normalized_;
};

enum class Sign { plus, minus };

/// <u|v> = a^T G b over the union basis.
double inner_product(const LinearCombination& u, const LinearCombination& v);

/// N (psi +/- phi) with N = 1 / ||psi +/- phi||. Throws DegenerateCombination
/// when ||psi +/- phi||^2 < 1e-12.
LinearCombination combine(const GaussianState& psi, const GaussianState& phi, Sign sign);

/// ||u - v|| for normalized u, v; throws NotNormalized otherwise.
double distance_lc(const LinearCombination& u, const LinearCombination& v);

double evaluate(const LinearCombination& u, double x);

} // namespace qconcept
