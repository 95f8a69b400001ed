#pragma once

#include <vector>

#include "qconcept/state_geometry.hpp"

namespace qconcept {

struct PairTerm {
  double coefficient;
  GaussianState left;
  GaussianState right;
};

/// Element of the two-factor tensor space, sum_k c_k (left_k (x) right_k).
/// Terms are stored exactly as given; no reordering or merging, so the sign
/// structure of a combination stays visible.
class PairTensor {
public:
  explicit PairTensor(std::vector<PairTerm> terms);

  const std::vector<PairTerm>& terms() const noexcept { return terms_; }

private:
  std::vector<PairTerm> terms_;
};

/// Bilinear expansion with <a(x)b|c(x)d> = <a|c><b|d>.
double tensor_inner_product(const PairTensor& a, const PairTensor& b);

/// Normalized psi(x)phi + phi(x)psi.
PairTensor symmetrize(const GaussianState& psi, const GaussianState& phi);

/// Normalized psi(x)phi - phi(x)psi; throws DegenerateCombination when
/// psi == phi or 1 - s^2 < 1e-12.
PairTensor antisymmetrize(const GaussianState& psi, const GaussianState& phi);

/// |<Psi+|Psi->|, zero in exact arithmetic.
double orthogonality_defect(const GaussianState& psi, const GaussianState& phi);

} // namespace qconcept
