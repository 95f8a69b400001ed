#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "qconcept/errors.hpp"
#include "qconcept/fuzzy.hpp"
#include "qconcept/isotonic.hpp"
#include "qconcept/nogo_lab.hpp"
#include "qconcept/report.hpp"
#include "qconcept/superposition.hpp"
#include "qconcept/tensor.hpp"

namespace py = pybind11;
using namespace qconcept;

namespace {

// Reports cross into Python as plain dicts via their JSON form.
template <typename T>
py::object as_dict(const T& value) {
  return py::module_::import("json").attr("loads")(dump_json(to_json(value)));
}

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") {
    return Sign::plus;
  }
  if (s == "-" || s == "minus") {
    return Sign::minus;
  }
  throw InvalidParameter("sign must be '+' or '-'");
}

} // namespace

PYBIND11_MODULE(_qconcept, m) {
  m.doc() = "Gaussian concept states, fuzzy metric machinery and no-go experiments";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InvalidParameter>(m, "InvalidParameter", base.ptr());
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<QuadratureFailure>(m, "QuadratureFailure", base.ptr());
  py::register_exception<DegenerateCombination>(m, "DegenerateCombination", base.ptr());
  py::register_exception<NotNormalized>(m, "NotNormalized", base.ptr());
  py::register_exception<InvalidMembership>(m, "InvalidMembership", base.ptr());
  py::register_exception<DegenerateMembership>(m, "DegenerateMembership", base.ptr());
  py::register_exception<GridMismatch>(m, "GridMismatch", base.ptr());

  py::class_<GaussianState>(m, "GaussianState")
      .def(py::init<double, double>(), py::arg("center"), py::arg("width"))
      .def_property_readonly("center", &GaussianState::center)
      .def_property_readonly("width", &GaussianState::width)
      .def(py::self == py::self)
      .def("__repr__", [](const GaussianState& g) {
        return "GaussianState(center=" + format_number(g.center()) +
               ", width=" + format_number(g.width()) + ")";
      });

  py::class_<Grid>(m, "Grid")
      .def(py::init<double, double, std::size_t>(), py::arg("lo"), py::arg("hi"), py::arg("n"))
      .def_property_readonly("lo", &Grid::lo)
      .def_property_readonly("hi", &Grid::hi)
      .def_property_readonly("n", &Grid::size)
      .def("point", &Grid::point);

  m.def("car", &concepts::car);
  m.def("boat", &concepts::boat);
  m.def("object", &concepts::object);

  m.def("amplitude", &amplitude, py::arg("state"), py::arg("x"));
  m.def("overlap", &overlap);
  m.def("overlap_quadrature", &overlap_quadrature, py::arg("a"), py::arg("b"),
        py::arg("tol") = 1e-8);
  m.def("fidelity", &fidelity);
  m.def("distance", &distance);

  py::class_<LinearCombination>(m, "LinearCombination")
      .def(py::init<std::vector<double>, std::vector<GaussianState>, bool>(),
           py::arg("coefficients"), py::arg("basis"), py::arg("normalized") = false)
      .def(py::init<const GaussianState&>(), py::arg("state"))
      .def_property_readonly("coefficients", &LinearCombination::coefficients)
      .def_property_readonly("basis", &LinearCombination::basis)
      .def_property_readonly("normalized", &LinearCombination::normalized);
  m.def("combine", [](const GaussianState& a, const GaussianState& b, const std::string& sign) {
    return combine(a, b, parse_sign(sign));
  });
  m.def("inner_product", &inner_product);
  m.def("distance_lc", &distance_lc);
  m.def("evaluate", &evaluate);

  py::class_<PairTerm>(m, "PairTerm")
      .def_readonly("coefficient", &PairTerm::coefficient)
      .def_readonly("left", &PairTerm::left)
      .def_readonly("right", &PairTerm::right);
  py::class_<PairTensor>(m, "PairTensor").def_property_readonly("terms", &PairTensor::terms);
  m.def("symmetrize", &symmetrize);
  m.def("antisymmetrize", &antisymmetrize);
  m.def("tensor_inner_product", &tensor_inner_product);
  m.def("orthogonality_defect", &orthogonality_defect);

  m.def("tnorm", [](const std::string& k, double a, double b) {
    return fuzzy_apply(parse_fuzzy_operator(k), a, b);
  }, py::arg("kind"), py::arg("a"), py::arg("b"));
  m.def("membership", [](const GaussianState& g, const Grid& grid) {
    return membership_from_state(g, grid).values();
  });
  m.def("metric_eval", [](const std::vector<GaussianState>& carrier, std::size_t i, std::size_t j,
                          double t) {
    return metric_eval(StandardFuzzyMetric(carrier, TNormKind::product), i, j, t);
  });
  m.def("axiom_check", [](const std::vector<GaussianState>& carrier, const std::string& tnorm,
                          std::size_t samples, std::uint64_t seed) {
    return as_dict(axiom_check(StandardFuzzyMetric(carrier, parse_tnorm(tnorm)), samples, seed));
  }, py::arg("carrier"), py::arg("tnorm") = "product", py::arg("samples") = 10000,
     py::arg("seed") = 42);

  m.def("isotonic_fit", [](const std::vector<double>& y, std::optional<std::vector<double>> w,
                           bool increasing) {
    const std::vector<double> weights = w.value_or(std::vector<double>(y.size(), 1.0));
    return isotonic_fit(y, weights,
                        increasing ? Monotonicity::increasing : Monotonicity::decreasing);
  }, py::arg("y"), py::arg("weights") = py::none(), py::arg("increasing") = true);

  m.def("interference_experiment", [](const GaussianState& a, const GaussianState& b,
                                      const std::string& op) {
    return as_dict(interference_experiment(a, b, default_grid(a, b), parse_fuzzy_operator(op)));
  }, py::arg("psi"), py::arg("phi"), py::arg("op") = "product");
  m.def("antisymmetry_experiment", [](const GaussianState& a, const GaussianState& b,
                                      const std::string& op) {
    return as_dict(antisymmetry_experiment(a, b, default_grid(a, b), parse_fuzzy_operator(op)));
  }, py::arg("psi"), py::arg("phi"), py::arg("op") = "product");
  m.def("perturbation_experiment", [](double delta) {
    return as_dict(perturbation_experiment(delta));
  });
  m.def("embedding_feasibility", [](const std::vector<GaussianState>& states,
                                    const std::string& tnorm, const std::string& family,
                                    double t_star) {
    return as_dict(embedding_feasibility(
        EmbeddingProblem{states, parse_tnorm(tnorm), parse_embedding_family(family)}, t_star));
  }, py::arg("states"), py::arg("tnorm") = "product", py::arg("family") = "exponential",
     py::arg("t_star") = 1.0);
  m.def("paper_table", [] { return as_dict(paper_table()); });
}
