#include <cmath>
#include <string>
#include <vector>

#include "qconcept/errors.hpp"
#include "qconcept/fuzzy.hpp"
#include "qconcept/random.hpp"

namespace qconcept {

namespace {

class Tally {
public:
  explicit Tally(AxiomOutcome& out) : out_(out) {}

  void pass() { ++out_.checks; }

  void fail(double magnitude, const AxiomWitness& w) {
    ++out_.checks;
    ++out_.violations;
    if (out_.violations == 1 || magnitude > out_.worst_violation) {
      out_.worst_violation = magnitude;
      out_.worst_witness = w;
    }
  }

private:
  AxiomOutcome& out_;
};

} // namespace

std::size_t AxiomReport::total_violations() const {
  std::size_t n = 0;
  for (const auto& a : axioms) {
    n += a.violations;
  }
  return n;
}

AxiomReport check_fuzzy_metric_axioms(std::size_t carrier_size,
                                      const std::function<bool(std::size_t, std::size_t)>& same_point,
                                      const FuzzyMetricFn& m, TNormKind tnorm,
                                      std::size_t samples, std::uint64_t seed,
                                      const AxiomCheckOptions& options) {
  if (carrier_size == 0) {
    throw InvalidInput("axiom check needs a non-empty carrier");
  }
  if (samples == 0) {
    throw InvalidParameter("axiom check needs at least one sample");
  }
  if (!(options.t_min > 0.0 && options.t_min < options.t_max) || options.time_grid_points < 2) {
    throw InvalidParameter("axiom check time grid must satisfy 0 < t_min < t_max");
  }

  AxiomReport report;
  report.tnorm = std::string(to_string(tnorm));
  report.samples = samples;
  report.seed = seed;
  report.carrier_size = carrier_size;
  report.lipschitz_bound = options.lipschitz_bound;
  report.step_relative = options.step_relative;
  const char* statements[5] = {
      "M(x,y,0) = 0",
      "M(x,y,t) = 1 iff x = y (per sample: M = 1 for x = y, M < 1 otherwise)",
      "M(x,y,t) = M(y,x,t)",
      "T(M(x,y,t), M(y,z,s)) <= M(x,z,t+s)",
      "|M(x,y,t+h) - M(x,y,t)| <= L h with h = step_relative * t",
  };
  for (int a = 0; a < 5; ++a) {
    report.axioms[a].axiom = a + 1;
    report.axioms[a].statement = statements[a];
  }

  std::vector<double> times(options.time_grid_points);
  const double log_lo = std::log(options.t_min);
  const double log_hi = std::log(options.t_max);
  for (std::size_t g = 0; g < times.size(); ++g) {
    times[g] = std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(g) /
                                     static_cast<double>(times.size() - 1));
  }

  Tally zero_time(report.axioms[0]);
  Tally identity(report.axioms[1]);
  Tally symmetry(report.axioms[2]);
  Tally triangle(report.axioms[3]);
  Tally continuity(report.axioms[4]);

  SeededRng rng(seed);
  for (std::size_t n = 0; n < samples; ++n) {
    const std::size_t i = rng.index(carrier_size);
    const std::size_t j = rng.index(carrier_size);
    const std::size_t k = rng.index(carrier_size);
    const double t = times[rng.index(times.size())];
    const double s = times[rng.index(times.size())];
    const AxiomWitness w{i, j, k, t, s};

    const double at_zero = m(i, j, 0.0);
    at_zero == 0.0 ? zero_time.pass() : zero_time.fail(std::abs(at_zero), w);

    const double mij = m(i, j, t);
    if (same_point(i, j)) {
      mij == 1.0 ? identity.pass() : identity.fail(std::abs(1.0 - mij), w);
    } else {
      mij < 1.0 ? identity.pass() : identity.fail(mij - 1.0, w);
    }

    const double mji = m(j, i, t);
    mij == mji ? symmetry.pass() : symmetry.fail(std::abs(mij - mji), w);

    const double rhs = m(i, k, t + s);
    double lhs = 0.0;
    try {
      lhs = tnorm_apply(tnorm, mij, m(j, k, s));
    } catch (const InvalidMembership&) {
      lhs = 2.0; // out-of-range membership is itself a failure
    }
    lhs <= rhs ? triangle.pass() : triangle.fail(lhs - rhs, w);

    const double h = options.step_relative * t;
    const double increment = std::abs(m(i, j, t + h) - mij);
    report.max_increment_ratio = std::max(report.max_increment_ratio, increment / h);
    increment <= options.lipschitz_bound * h
        ? continuity.pass()
        : continuity.fail(increment - options.lipschitz_bound * h, w);
  }
  return report;
}

AxiomReport axiom_check(const StandardFuzzyMetric& f, std::size_t samples, std::uint64_t seed,
                        const AxiomCheckOptions& options) {
  const auto same = [&f](std::size_t i, std::size_t j) { return f.carrier()[i] == f.carrier()[j]; };
  const auto m = [&f](std::size_t i, std::size_t j, double t) { return metric_eval(f, i, j, t); };
  return check_fuzzy_metric_axioms(f.carrier().size(), same, m, f.tnorm(), samples, seed, options);
}

} // namespace qconcept
