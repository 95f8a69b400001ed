#include <algorithm>
#include <bit>
#include <cmath>

#include "qconcept/errors.hpp"
#include "qconcept/nogo_lab.hpp"

namespace qconcept {

Grid default_grid(const GaussianState& a, const GaussianState& b, std::size_t n, double widths) {
  const double w = std::max(a.width(), b.width());
  return Grid(std::min(a.center(), b.center()) - widths * w,
              std::max(a.center(), b.center()) + widths * w, n);
}

bool bitwise_equal(const MembershipGrid& a, const MembershipGrid& b) {
  if (!(a.grid() == b.grid())) {
    return false;
  }
  return std::equal(a.values().begin(), a.values().end(), b.values().begin(),
                    [](double x, double y) {
                      return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y);
                    });
}

InterferenceReport interference_experiment(const GaussianState& psi, const GaussianState& phi,
                                           const Grid& grid, const FuzzyOperator& op) {
  if (psi == phi) {
    throw DegenerateCombination("interference experiment needs distinct states");
  }
  const LinearCombination plus = combine(psi, phi, Sign::plus);
  const LinearCombination minus = combine(psi, phi, Sign::minus);
  const LinearCombination target(phi);

  InterferenceReport r{.psi = psi, .phi = phi, .op = std::string(to_string(op)), .grid = grid};
  r.overlap = overlap(psi, phi);
  r.d_plus = distance_lc(plus, target);
  r.d_minus = distance_lc(minus, target);
  r.d_psi_phi = distance(psi, phi);
  r.quantum_gap = r.d_minus - r.d_plus;

  const MembershipGrid mu_psi = membership_from_state(psi, grid);
  const MembershipGrid mu_plus_phi = membership_from_state(LinearCombination({1.0}, {phi}), grid);
  const MembershipGrid mu_minus_phi = membership_from_state(LinearCombination({-1.0}, {phi}), grid);
  const MembershipGrid image_plus = fuzzy_combine(mu_psi, mu_plus_phi, op);
  const MembershipGrid image_minus = fuzzy_combine(mu_psi, mu_minus_phi, op);
  r.fuzzy_plus = digest(image_plus);
  r.fuzzy_minus = digest(image_minus);
  r.fuzzy_identical = bitwise_equal(image_plus, image_minus);
  return r;
}

AntisymmetryReport antisymmetry_experiment(const GaussianState& psi, const GaussianState& phi,
                                           const Grid& grid, const FuzzyOperator& op) {
  const PairTensor sym = symmetrize(psi, phi);
  const PairTensor anti = antisymmetrize(psi, phi);

  AntisymmetryReport r{.psi = psi, .phi = phi, .op = std::string(to_string(op)), .grid = grid};
  r.overlap = overlap(psi, phi);
  r.plus_minus_inner = tensor_inner_product(sym, anti);
  r.orthogonality_defect = std::abs(r.plus_minus_inner);
  r.plus_norm = std::sqrt(tensor_inner_product(sym, sym));
  r.minus_norm = std::sqrt(tensor_inner_product(anti, anti));
  r.hilbert_distance = std::sqrt(std::max(
      0.0, r.plus_norm * r.plus_norm + r.minus_norm * r.minus_norm - 2.0 * r.plus_minus_inner));
  r.quantum_distinguishable = std::abs(r.plus_minus_inner) < 1.0 - 1e-9;

  const MembershipGrid mu_psi = membership_from_state(psi, grid);
  const MembershipGrid mu_phi = membership_from_state(phi, grid);
  const MembershipGrid forward = fuzzy_combine(mu_psi, mu_phi, op);
  const MembershipGrid reverse = fuzzy_combine(mu_phi, mu_psi, op);
  r.fuzzy_forward = digest(forward);
  r.fuzzy_reverse = digest(reverse);
  r.fuzzy_bitwise_equal = bitwise_equal(forward, reverse);
  return r;
}

} // namespace qconcept
