#include <doctest.h>

#include <cmath>

#include "qconcept/errors.hpp"
#include "qconcept/nogo_lab.hpp"
#include "qconcept/random.hpp"
#include "qconcept/superposition.hpp"
#include "support/oracles.hpp"

using namespace qconcept;

namespace ref {
constexpr double kOverlap = 0.732295047660785045;
constexpr double kOverlapCarBoat = 0.135335283236612692;
constexpr double kMinusNormSq = 0.535409904678429910; // 2 - 2s
constexpr double kPlusNormSq = 3.464590095321570090;  // 2 + 2s
constexpr double kNPlus = 0.537247088081594867;
constexpr double kNMinus = 1.366648407026281304;
constexpr double kDPlus = 0.372369520627227593;
constexpr double kDMinus = 1.652790698586747660;
constexpr double kPsiMinusAt4 = 0.0988670795953991209;
} // namespace ref

TEST_CASE("gram matrix") {
  const auto car = concepts::car();
  const auto obj = concepts::object();
  const auto boat = concepts::boat();

  const std::vector<GaussianState> one = {car};
  const auto g1 = gram_matrix(one);
  CHECK(g1.size() == 1);
  CHECK(g1(0, 0) == 1.0);

  const std::vector<GaussianState> three = {car, boat, obj};
  const auto g3 = gram_matrix(three);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(g3(i, i) == 1.0);
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(g3(i, j) == g3(j, i));
    }
  }
  CHECK(g3(0, 1) == doctest::Approx(ref::kOverlapCarBoat).epsilon(1e-14));
  CHECK(g3(0, 2) == doctest::Approx(ref::kOverlap).epsilon(1e-14));
  CHECK(g3(1, 2) == doctest::Approx(ref::kOverlap).epsilon(1e-14));
  CHECK_THROWS_AS(gram_matrix(std::vector<GaussianState>{}), InvalidInput);
}

TEST_CASE("linear combination invariants") {
  const auto car = concepts::car();
  CHECK_THROWS_AS(LinearCombination({1.0, 2.0}, {car}), InvalidInput);
  CHECK_THROWS_AS(LinearCombination({1.0, 1.0}, {car, car}), InvalidInput);
  CHECK_THROWS_AS(LinearCombination({}, {}), InvalidInput);
  CHECK_THROWS_AS(LinearCombination({NAN}, {car}), InvalidInput);
}

TEST_CASE("inner products of unnormalized sums and differences") {
  const auto car = concepts::car();
  const auto obj = concepts::object();
  const LinearCombination unit(make_gaussian(0, 1));
  CHECK(inner_product(unit, unit) == 1.0);

  const LinearCombination diff({1.0, -1.0}, {car, obj});
  const LinearCombination sum({1.0, 1.0}, {car, obj});
  CHECK(inner_product(diff, diff) == doctest::Approx(ref::kMinusNormSq).epsilon(1e-13));
  CHECK(inner_product(sum, sum) == doctest::Approx(ref::kPlusNormSq).epsilon(1e-14));
  CHECK(inner_product(sum, diff) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("union basis merges equal states") {
  const auto car = concepts::car();
  const auto obj = concepts::object();
  const LinearCombination u({2.0}, {car});
  const LinearCombination v({1.0, 3.0}, {obj, car});
  // <2 car | obj + 3 car> = 2 s + 6
  CHECK(inner_product(u, v) == doctest::Approx(2 * ref::kOverlap + 6).epsilon(1e-14));
  CHECK(inner_product(u, v) == doctest::Approx(inner_product(v, u)).epsilon(1e-15));
  const auto merged = LinearCombination::affine(1.0, u, -1.0, v);
  CHECK(merged.size() == 2);
}

TEST_CASE("combine") {
  const auto car = concepts::car();
  const auto obj = concepts::object();

  const auto plus = combine(car, obj, Sign::plus);
  REQUIRE(plus.size() == 2);
  CHECK(plus.coefficients()[0] == doctest::Approx(ref::kNPlus).epsilon(1e-14));
  CHECK(plus.coefficients()[1] == doctest::Approx(ref::kNPlus).epsilon(1e-14));
  CHECK(plus.normalized());

  const auto minus = combine(car, obj, Sign::minus);
  CHECK(minus.coefficients()[0] == doctest::Approx(ref::kNMinus).epsilon(1e-14));
  CHECK(minus.coefficients()[1] == doctest::Approx(-ref::kNMinus).epsilon(1e-14));

  CHECK_THROWS_AS(combine(car, car, Sign::minus), DegenerateCombination);
  const auto self = combine(car, car, Sign::plus);
  CHECK(self.size() == 1);
  CHECK(self.coefficients()[0] == 1.0);
}

TEST_CASE("distance between combinations") {
  const auto car = concepts::car();
  const auto obj = concepts::object();
  const LinearCombination target(obj);
  const auto plus = combine(car, obj, Sign::plus);
  const auto minus = combine(car, obj, Sign::minus);
  CHECK(distance_lc(plus, target) == doctest::Approx(ref::kDPlus).epsilon(1e-13));
  CHECK(distance_lc(minus, target) == doctest::Approx(ref::kDMinus).epsilon(1e-13));
  CHECK(distance_lc(plus, plus) == 0.0);
  CHECK(distance_lc(minus, minus) == 0.0);

  // sqrt(2 - 2 <u|v>) form agrees for well-conditioned pairs.
  CHECK(distance_lc(minus, target) ==
        doctest::Approx(std::sqrt(2 - 2 * inner_product(minus, target))).epsilon(1e-13));

  const LinearCombination raw({1.0, 1.0}, {car, obj});
  CHECK_THROWS_AS(distance_lc(raw, target), NotNormalized);
  CHECK_THROWS_AS(distance_lc(target, raw), NotNormalized);
  // An unflagged combination that is numerically normalized is accepted.
  const LinearCombination manual({ref::kNPlus, ref::kNPlus}, {car, obj});
  CHECK(distance_lc(manual, target) == doctest::Approx(ref::kDPlus).epsilon(1e-12));
}

TEST_CASE("pointwise evaluation") {
  const auto car = concepts::car();
  const auto obj = concepts::object();
  const LinearCombination unit(make_gaussian(0, 1));
  CHECK(evaluate(unit, 0.0) == doctest::Approx(oracle::gaussian(0, 1, 0)).epsilon(1e-15));

  const auto minus = combine(car, obj, Sign::minus);
  CHECK(evaluate(minus, 4.0) == doctest::Approx(ref::kPsiMinusAt4).epsilon(1e-12));
  CHECK(evaluate(minus, 4.0) ==
        doctest::Approx(ref::kNMinus * (oracle::gaussian(5, 1, 4) - oracle::gaussian(3, 2, 4)))
            .epsilon(1e-12));
  CHECK(evaluate(minus, 0.0) < 0.0);

  const auto self = combine(obj, obj, Sign::plus);
  for (double x : {-4.0, 0.0, 3.0, 7.5}) {
    CHECK(evaluate(self, x) == amplitude(obj, x));
  }
}

TEST_CASE("parallelogram identity and the interference inequality") {
  SeededRng rng(11);
  for (int n = 0; n < 1000; ++n) {
    const auto a = oracle::random_state(rng, -10, 10, 0.2, 5);
    const auto b = oracle::random_state(rng, -10, 10, 0.2, 5);
    const LinearCombination sum({1.0, 1.0}, {a, b});
    const LinearCombination diff({1.0, -1.0}, {a, b});
    const double plus_sq = inner_product(sum, sum);
    const double minus_sq = inner_product(diff, diff);
    if (n < 100) {
      CHECK(std::abs(plus_sq + minus_sq - 4.0) <= 1e-10);
    }
    const LinearCombination target(b);
    const auto pc = combine(a, b, Sign::plus);
    const auto mc = combine(a, b, Sign::minus);
    // Far-apart pairs have overlaps below the resolution of 2 +/- 2s, where
    // the two sides round to the same double.
    if (overlap(a, b) > 1e-15) {
      CHECK(minus_sq < plus_sq);
      CHECK(distance_lc(mc, target) > distance_lc(pc, target));
    } else {
      CHECK(minus_sq <= plus_sq);
      CHECK(distance_lc(mc, target) >= distance_lc(pc, target));
    }
    if (n < 100) {
      CHECK(std::abs(inner_product(pc, pc) - 1.0) <= 1e-10);
      CHECK(std::abs(inner_product(mc, mc) - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("Cauchy-Schwarz on random combinations") {
  SeededRng rng(5);
  for (int n = 0; n < 200; ++n) {
    std::vector<GaussianState> basis_u;
    std::vector<GaussianState> basis_v;
    std::vector<double> cu;
    std::vector<double> cv;
    for (int k = 0; k < 3; ++k) {
      basis_u.push_back(oracle::random_state(rng, -5, 5, 0.3, 3));
      basis_v.push_back(oracle::random_state(rng, -5, 5, 0.3, 3));
      cu.push_back(rng.uniform(-2, 2));
      cv.push_back(rng.uniform(-2, 2));
    }
    // Share one state so the union basis is exercised.
    basis_v[0] = basis_u[1];
    const LinearCombination u(cu, basis_u);
    const LinearCombination v(cv, basis_v);
    const double uv = inner_product(u, v);
    CHECK(inner_product(u, u) >= 0.0);
    CHECK(std::abs(uv - inner_product(v, u)) <= 1e-12);
    CHECK(std::abs(uv) <= std::sqrt(inner_product(u, u) * inner_product(v, v)) + 1e-10);
  }
}
