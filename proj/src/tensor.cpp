#include "qconcept/tensor.hpp"

#include <cmath>
#include <string>

#include "qconcept/errors.hpp"

namespace qconcept {

namespace {

// Neumaier summation: the symmetric/antisymmetric cross terms cancel
// pairwise, and compensated accumulation keeps that cancellation exact.
class CompensatedSum {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

} // namespace

PairTensor::PairTensor(std::vector<PairTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw InvalidInput("pair tensor needs at least one term");
  }
  for (const PairTerm& t : terms_) {
    if (!std::isfinite(t.coefficient)) {
      throw InvalidInput("pair tensor coefficients must be finite");
    }
  }
}

double tensor_inner_product(const PairTensor& a, const PairTensor& b) {
  CompensatedSum total;
  for (const PairTerm& x : a.terms()) {
    for (const PairTerm& y : b.terms()) {
      total.add(x.coefficient * y.coefficient * overlap(x.left, y.left) *
                overlap(x.right, y.right));
    }
  }
  return total.value();
}

PairTensor symmetrize(const GaussianState& psi, const GaussianState& phi) {
  const double s = overlap(psi, phi);
  const double c = 1.0 / std::sqrt(2.0 * (1.0 + s * s));
  return PairTensor({{c, psi, phi}, {c, phi, psi}});
}

PairTensor antisymmetrize(const GaussianState& psi, const GaussianState& phi) {
  // 1 - s^2 = -expm1(2 log s)
  const double gap = -std::expm1(2.0 * log_overlap(psi, phi));
  if (psi == phi || !(gap >= 1e-12)) {
    throw DegenerateCombination("antisymmetrization needs 1 - s^2 >= 1e-12, got " +
                                std::to_string(gap));
  }
  const double c = 1.0 / std::sqrt(2.0 * gap);
  return PairTensor({{c, psi, phi}, {-c, phi, psi}});
}

double orthogonality_defect(const GaussianState& psi, const GaussianState& phi) {
  return std::abs(tensor_inner_product(symmetrize(psi, phi), antisymmetrize(psi, phi)));
}

} // namespace qconcept
