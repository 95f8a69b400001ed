#include "qconcept/superposition.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>

#include "qconcept/errors.hpp"

namespace qconcept {

namespace {

constexpr double kDegenerateNormSquared = 1e-12;
constexpr double kNormTolerance = 1e-10;

std::size_t find_state(const std::vector<GaussianState>& basis, const GaussianState& g) {
  return static_cast<std::size_t>(std::find(basis.begin(), basis.end(), g) - basis.begin());
}

void require_normalized(const LinearCombination& u, const char* which) {
  if (u.normalized()) {
    return;
  }
  const double norm_sq = inner_product(u, u);
  if (std::abs(norm_sq - 1.0) > kNormTolerance) {
    throw NotNormalized(std::string(which) + " has squared norm " + std::to_string(norm_sq));
  }
}

} // namespace

GramMatrix::GramMatrix(std::span<const GaussianState> basis)
    : n_(basis.size()), entries_(basis.size() * basis.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    entries_[i * n_ + i] = 1.0;
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double s = overlap(basis[i], basis[j]);
      entries_[i * n_ + j] = s;
      entries_[j * n_ + i] = s;
    }
  }
}

GramMatrix gram_matrix(std::span<const GaussianState> basis) {
  if (basis.empty()) {
    throw InvalidInput("gram matrix of an empty basis");
  }
  return GramMatrix(basis);
}

LinearCombination::LinearCombination(std::vector<double> coefficients,
                                     std::vector<GaussianState> basis, bool normalized)
    : coefficients_(std::move(coefficients)), basis_(std::move(basis)), normalized_(normalized) {
  if (basis_.empty()) {
    throw InvalidInput("linear combination needs at least one basis state");
  }
  if (coefficients_.size() != basis_.size()) {
    throw InvalidInput("coefficient and basis lengths differ");
  }
  for (double c : coefficients_) {
    if (!std::isfinite(c)) {
      throw InvalidInput("linear combination coefficients must be finite");
    }
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      if (basis_[i] == basis_[j]) {
        throw InvalidInput("linear combination basis states must be pairwise distinct");
      }
    }
  }
}

LinearCombination::LinearCombination(const GaussianState& g)
    : coefficients_{1.0}, basis_{g}, normalized_(true) {}

LinearCombination LinearCombination::affine(double a, const LinearCombination& u, double b,
                                            const LinearCombination& v) {
  std::vector<GaussianState> basis = u.basis_;
  std::vector<double> coeffs;
  coeffs.reserve(u.size() + v.size());
  for (double c : u.coefficients_) {
    coeffs.push_back(a * c);
  }
  for (std::size_t j = 0; j < v.size(); ++j) {
    const std::size_t at = find_state(basis, v.basis_[j]);
    if (at == basis.size()) {
      basis.push_back(v.basis_[j]);
      coeffs.push_back(b * v.coefficients_[j]);
    } else {
      coeffs[at] += b * v.coefficients_[j];
    }
  }
  return LinearCombination(std::move(coeffs), std::move(basis));
}

double inner_product(const LinearCombination& u, const LinearCombination& v) {
  // Union basis: u's states first, then those of v not already present.
  std::vector<GaussianState> basis = u.basis();
  std::vector<double> a = u.coefficients();
  std::vector<double> b(a.size(), 0.0);
  for (std::size_t j = 0; j < v.size(); ++j) {
    const std::size_t at = find_state(basis, v.basis()[j]);
    if (at == basis.size()) {
      basis.push_back(v.basis()[j]);
      a.push_back(0.0);
      b.push_back(v.coefficients()[j]);
    } else {
      b[at] += v.coefficients()[j];
    }
  }
  const GramMatrix gram(basis);
  double total = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (a[i] == 0.0) {
      continue;
    }
    double row = 0.0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      row += gram(i, j) * b[j];
    }
    total += a[i] * row;
  }
  return total;
}

LinearCombination combine(const GaussianState& psi, const GaussianState& phi, Sign sign) {
  const double sign_value = sign == Sign::plus ? 1.0 : -1.0;
  // ||psi +/- phi||^2 = 2 +/- 2s, with 1 - s taken from expm1 so near-identical
  // pairs keep their relative accuracy.
  const double norm_sq = sign == Sign::plus ? 4.0 - 2.0 * overlap_deficit(psi, phi)
                                            : 2.0 * overlap_deficit(psi, phi);
  if (!(norm_sq >= kDegenerateNormSquared)) {
    std::ostringstream msg;
    msg << "||psi " << (sign == Sign::plus ? '+' : '-') << " phi||^2 = " << std::setprecision(3)
        << norm_sq << " is below 1e-12";
    throw DegenerateCombination(msg.str());
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  if (psi == phi) {
    return LinearCombination({2.0 * scale}, {psi}, true);
  }
  return LinearCombination({scale, sign_value * scale}, {psi, phi}, true);
}

double distance_lc(const LinearCombination& u, const LinearCombination& v) {
  require_normalized(u, "first combination");
  require_normalized(v, "second combination");
  const LinearCombination diff = LinearCombination::affine(1.0, u, -1.0, v);
  return std::sqrt(std::max(0.0, inner_product(diff, diff)));
}

double evaluate(const LinearCombination& u, double x) {
  double total = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    total += u.coefficients()[i] * amplitude(u.basis()[i], x);
  }
  return total;
}

} // namespace qconcept
