#include <doctest.h>

#include <cmath>
#include <vector>

#include "qconcept/errors.hpp"
#include "qconcept/fuzzy.hpp"
#include "qconcept/nogo_lab.hpp"
#include "qconcept/random.hpp"
#include "support/oracles.hpp"

using namespace qconcept;

namespace {

// 0.05 steps on [0, 1], built by division so 0 and 1 are exact.
std::vector<double> lattice() {
  std::vector<double> v;
  for (int k = 0; k <= 20; ++k) {
    v.push_back(k / 20.0);
  }
  return v;
}

// The arithmetic connectives round once per application, so
// regrouping can move the last bit.
double associativity_slack(const FuzzyOperator& op) {
  if (op == FuzzyOperator{TNormKind::minimum} || op == FuzzyOperator{TNormKind::lukasiewicz} ||
      op == FuzzyOperator{TCoNormKind::maximum}) {
    return 0.0;
  }
  return 4 * std::numeric_limits<double>::epsilon();
}

std::vector<FuzzyOperator> all_operators() {
  std::vector<FuzzyOperator> ops;
  for (auto k : kAllTNorms) {
    ops.emplace_back(k);
  }
  for (auto k : kAllTCoNorms) {
    ops.emplace_back(k);
  }
  return ops;
}

MembershipGrid random_membership(SeededRng& rng, const Grid& grid) {
  std::vector<double> v(grid.size());
  for (double& x : v) {
    x = rng.uniform();
  }
  return {grid, v};
}

} // namespace

TEST_CASE("t-norm examples") {
  CHECK(tnorm_apply(TNormKind::minimum, 0.3, 0.7) == 0.3);
  CHECK(tnorm_apply(TNormKind::lukasiewicz, 0.6, 0.7) == doctest::Approx(0.3).epsilon(1e-15));
  for (double x : lattice()) {
    CHECK(tnorm_apply(TNormKind::product, 1.0, x) == x);
  }
  CHECK_THROWS_AS(tnorm_apply(TNormKind::minimum, 1.5, 0.2), InvalidMembership);
  CHECK_THROWS_AS(tnorm_apply(TNormKind::product, -0.1, 0.2), InvalidMembership);
  CHECK_THROWS_AS(tnorm_apply(TNormKind::product, NAN, 0.2), InvalidMembership);
}

TEST_CASE("t-conorm examples") {
  CHECK(tconorm_apply(TCoNormKind::maximum, 0.3, 0.7) == 0.7);
  CHECK(tconorm_apply(TCoNormKind::bounded_sum, 0.6, 0.7) == 1.0);
  CHECK(tconorm_apply(TCoNormKind::probabilistic_sum, 0.5, 0.5) == 0.75);
  CHECK_THROWS_AS(tconorm_apply(TCoNormKind::maximum, 0.3, 1.01), InvalidMembership);
}

TEST_CASE("operator names round-trip") {
  for (const auto& op : all_operators()) {
    CHECK(parse_fuzzy_operator(to_string(op)) == op);
  }
  CHECK(parse_tnorm("lukasiewicz") == TNormKind::lukasiewicz);
  CHECK_THROWS_AS(parse_fuzzy_operator("median"), InvalidParameter);
  CHECK_THROWS_AS(parse_tnorm("maximum"), InvalidParameter);
}

TEST_CASE("t-norm and t-conorm laws on the lattice") {
  const auto grid = lattice();
  for (const auto& op : all_operators()) {
    CAPTURE(to_string(op));
    const bool is_tnorm = std::holds_alternative<TNormKind>(op);
    const double identity = is_tnorm ? 1.0 : 0.0;
    const double slack = associativity_slack(op);
    for (double a : grid) {
      CHECK(fuzzy_apply(op, a, identity) == a);
      CHECK(fuzzy_apply(op, identity, a) == a);
      for (double b : grid) {
        const double ab = fuzzy_apply(op, a, b);
        CHECK(ab == fuzzy_apply(op, b, a));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
        for (double c : grid) {
          CHECK(std::abs(fuzzy_apply(op, ab, c) - fuzzy_apply(op, a, fuzzy_apply(op, b, c))) <=
                slack);
          if (b <= c) {
            CHECK(fuzzy_apply(op, a, b) <= fuzzy_apply(op, a, c));
            CHECK(fuzzy_apply(op, b, a) <= fuzzy_apply(op, c, a));
          }
        }
      }
    }
  }
}

TEST_CASE("membership grid enforces its range") {
  const Grid g(0, 1, 3);
  CHECK_NOTHROW(MembershipGrid(g, {0.0, 0.5, 1.0}));
  CHECK_THROWS_AS(MembershipGrid(g, {0.0, 1.0 + 1e-15, 1.0}), InvalidMembership);
  CHECK_THROWS_AS(MembershipGrid(g, {-1e-300, 0.5, 1.0}), InvalidMembership);
  CHECK_THROWS_AS(MembershipGrid(g, {0.0, NAN, 1.0}), InvalidMembership);
  CHECK_THROWS_AS(MembershipGrid(g, {0.0, 1.0}), InvalidInput);
}

TEST_CASE("membership from states") {
  const Grid grid(-5, 15, 2001);
  const auto car = membership_from_state(concepts::car(), grid);
  CHECK(car.values()[1000] == 1.0);
  CHECK(digest(car).argmax == 5.0);
  CHECK(digest(car).max == 1.0);

  const auto obj = membership_from_state(concepts::object(), grid);
  CHECK(obj.values()[800] == 1.0);
  // Half maximum where (x - 3)^2 = 2 sigma^2 ln 2.
  const double half = std::sqrt(8.0 * std::log(2.0));
  for (double x : {3.0 - half, 3.0 + half}) {
    const double pos = (x - grid.lo()) / grid.spacing();
    const auto i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    const double interp = (1 - frac) * obj.values()[i] + frac * obj.values()[i + 1];
    CHECK(interp == doctest::Approx(0.5).epsilon(1e-4));
  }

  // The destructive combination has nodes where the two amplitudes cross.
  const auto minus = combine(concepts::car(), concepts::object(), Sign::minus);
  const auto m = membership_from_state(minus, grid);
  for (double node : {3.76241608985935865, 7.57091724347397468}) {
    CHECK(oracle::gaussian(5, 1, node) == doctest::Approx(oracle::gaussian(3, 2, node)).epsilon(1e-12));
    const auto i = static_cast<std::size_t>(std::lround((node - grid.lo()) / grid.spacing()));
    CHECK(m.values()[i] < 1e-4);
    CHECK(m.values()[i] <= m.values()[i - 1]);
    CHECK(m.values()[i] <= m.values()[i + 1]);
    CHECK(evaluate(minus, node - 0.05) * evaluate(minus, node + 0.05) < 0.0);
  }

  CHECK_THROWS_AS(membership_from_state(make_gaussian(0, 0.01), Grid(1000, 1001, 5)),
                  DegenerateMembership);
}

TEST_CASE("fuzzy_combine") {
  const Grid grid(-5, 15, 2001);
  const auto a = membership_from_state(concepts::car(), grid);
  const auto b = membership_from_state(concepts::object(), grid);
  const MembershipGrid ones(grid, std::vector<double>(grid.size(), 1.0));
  const MembershipGrid zeros(grid, std::vector<double>(grid.size(), 0.0));

  CHECK(fuzzy_combine(a, b, TNormKind::minimum).values() ==
        fuzzy_combine(b, a, TNormKind::minimum).values());
  CHECK(fuzzy_combine(a, ones, TNormKind::product).values() == a.values());
  CHECK(fuzzy_combine(a, zeros, TCoNormKind::maximum).values() == a.values());
  CHECK_THROWS_AS(fuzzy_combine(a, MembershipGrid(Grid(-5, 15, 3), {0, 0, 0}), TNormKind::minimum),
                  GridMismatch);

  SeededRng rng(8);
  for (int n = 0; n < 100; ++n) {
    const Grid g(0, 1, 64);
    const auto x = random_membership(rng, g);
    const auto y = random_membership(rng, g);
    for (const auto& op : all_operators()) {
      CHECK(bitwise_equal(fuzzy_combine(x, y, op), fuzzy_combine(y, x, op)));
    }
  }
}

TEST_CASE("digest fingerprints values") {
  const Grid g(0, 1, 3);
  const MembershipGrid a(g, {0.0, 1.0, 0.0});
  const MembershipGrid b(g, {0.0, 1.0, 1e-300});
  CHECK(digest(a).fnv1a != digest(b).fnv1a);
  CHECK(digest(a).area == doctest::Approx(0.5));
  CHECK(digest(a).argmax == 0.5);
}

TEST_CASE("metric_eval") {
  const StandardFuzzyMetric f({concepts::car(), concepts::boat(), concepts::object()},
                              TNormKind::product);
  CHECK(metric_eval(f, 0, 0, 1.0) == 1.0);
  CHECK(metric_eval(f, 0, 2, 1.0) == doctest::Approx(0.577461528703999361).epsilon(1e-14));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(metric_eval(f, i, j, 0.0) == 0.0);
      CHECK(metric_eval(f, i, j, 2.5) == metric_eval(f, j, i, 2.5));
      if (i != j) {
        CHECK(metric_eval(f, i, j, 1e3) < 1.0);
      }
    }
  }
  CHECK_THROWS_AS(metric_eval(f, 0, 1, -1.0), InvalidParameter);
  CHECK_THROWS_AS(metric_eval(f, 0, 1, NAN), InvalidParameter);
  CHECK_THROWS_AS(metric_eval(f, 0, 3, 1.0), InvalidParameter);
  CHECK_THROWS_AS(StandardFuzzyMetric({}, TNormKind::product), InvalidInput);
}

TEST_CASE("axiom checker on the standard construction") {
  const std::vector<GaussianState> carrier = {concepts::car(), concepts::boat(),
                                              concepts::object()};
  for (auto k : {TNormKind::minimum, TNormKind::product}) {
    const auto report = axiom_check(StandardFuzzyMetric(carrier, k), 10000, 42);
    CHECK(report.total_violations() == 0);
    for (const auto& a : report.axioms) {
      CHECK(a.checks == 10000);
    }
    CHECK(report.max_increment_ratio > 0.0);
    CHECK(report.max_increment_ratio <= report.lipschitz_bound);
  }
  // Lukasiewicz is weaker than product, so it cannot fail where product holds.
  CHECK(axiom_check(StandardFuzzyMetric(carrier, TNormKind::lukasiewicz), 10000, 42)
            .total_violations() == 0);
}

TEST_CASE("axiom checker reports an injected fault") {
  const StandardFuzzyMetric f({concepts::car(), concepts::boat(), concepts::object()},
                              TNormKind::product);
  const auto same = [](std::size_t i, std::size_t j) { return i == j; };
  const auto corrupted = [&](std::size_t i, std::size_t j, double t) {
    return (i == 0 && j == 0 && t > 0.0) ? 0.5 : metric_eval(f, i, j, t);
  };
  const auto report = check_fuzzy_metric_axioms(3, same, corrupted, TNormKind::product, 10000, 42);
  const auto& identity = report.axioms[1];
  CHECK(identity.violations > 0);
  CHECK(identity.worst_witness.i == 0);
  CHECK(identity.worst_witness.j == 0);
  CHECK(identity.worst_violation == 0.5);
  CHECK(report.axioms[0].violations == 0);
  CHECK(report.axioms[2].violations == 0);
  CHECK(report.axioms[4].violations == 0);
  // The corrupted self-similarity also breaks the triangle inequality, but
  // only on triples that start and end at the faulty point.
  CHECK(report.axioms[3].worst_witness.i == 0);
  CHECK(report.axioms[3].worst_witness.k == 0);
}

TEST_CASE("axiom checker is deterministic in its seed") {
  const StandardFuzzyMetric f({concepts::car(), concepts::boat(), concepts::object()},
                              TNormKind::lukasiewicz);
  const auto a = axiom_check(f, 2000, 7);
  const auto b = axiom_check(f, 2000, 7);
  CHECK(a.max_increment_ratio == b.max_increment_ratio);
  for (int k = 0; k < 5; ++k) {
    CHECK(a.axioms[k].violations == b.axioms[k].violations);
    CHECK(a.axioms[k].worst_violation == b.axioms[k].worst_violation);
  }
}
