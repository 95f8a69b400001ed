#include <cmath>
#include <numbers>

#include "qconcept/errors.hpp"
#include "qconcept/nogo_lab.hpp"

namespace qconcept {

std::string_view to_string(Ordering o) {
  switch (o) {
  case Ordering::less:
    return "less";
  case Ordering::equal:
    return "equal";
  case Ordering::greater:
    return "greater";
  }
  return "unknown";
}

PerturbationResult perturbation_experiment(double delta) {
  if (!std::isfinite(delta)) {
    throw InvalidParameter("perturbation delta must be finite");
  }
  const GaussianState shifted(concepts::object().center() + delta, concepts::object().width());
  PerturbationResult r;
  r.delta = delta;
  r.shifted_object = shifted;
  r.d_car = distance(concepts::car(), shifted);
  r.d_boat = distance(concepts::boat(), shifted);
  r.ordering = r.d_car < r.d_boat   ? Ordering::less
               : r.d_car > r.d_boat ? Ordering::greater
                                    : Ordering::equal;
  return r;
}

std::vector<TableRow> paper_table() {
  const GaussianState car = concepts::car();
  const GaussianState boat = concepts::boat();
  const GaussianState obj = concepts::object();

  const LinearCombination plus = combine(car, obj, Sign::plus);
  const LinearCombination minus = combine(car, obj, Sign::minus);
  const LinearCombination target(obj);
  const PerturbationResult shifted = perturbation_experiment(0.1);

  std::vector<TableRow> rows = {
      {"fidelity(car,obj)", fidelity(car, obj), 0.536, "~0.536", "quoted", 1e-3},
      {"overlap(car,obj)", overlap(car, obj), 0.732, "~0.732", "quoted", 1e-3},
      {"d_Q(car,obj)", distance(car, obj), 0.732, "~0.732", "quoted", 1e-3},
      {"d_Q(boat,obj)", distance(boat, obj), 0.732, "~0.732", "quoted", 1e-3},
      {"d_Q(car,boat)", distance(car, boat), std::numbers::sqrt2, "~sqrt(2)", "quoted", 0.1},
      {"d_Q(car,boat) exact", distance(car, boat), 1.315040, "1.315040", "closed-form", 1e-5},
      {"<Psi+|Psi->(car,obj)",
       tensor_inner_product(symmetrize(car, obj), antisymmetrize(car, obj)), 0.0, "0", "quoted",
       1e-12},
      {"d(psi-,obj)", distance_lc(minus, target), 1.652792, "1.652792", "closed-form", 1e-5},
      {"d(psi+,obj)", distance_lc(plus, target), 0.372366, "0.372366", "closed-form", 1e-5},
      {"d_Q(car,obj') mu=3.1", shifted.d_car, 0.711735, "0.711735", "closed-form", 1e-5},
      {"d_Q(boat,obj') mu=3.1", shifted.d_boat, 0.751749, "0.751749", "closed-form", 1e-5},
  };
  for (TableRow& row : rows) {
    row.pass = std::abs(row.computed - row.reference) <= row.tolerance;
  }
  return rows;
}

} // namespace qconcept
