#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qconcept/errors.hpp"
#include "qconcept/isotonic.hpp"
#include "qconcept/nogo_lab.hpp"

namespace qconcept {

namespace {

constexpr double kKnotMergeTolerance = 1e-9;
constexpr double kAlphaMin = 1e-3;
constexpr double kAlphaMax = 1e3;
constexpr std::size_t kAlphaGridPoints = 400;
constexpr std::size_t kGoldenIterations = 100;
constexpr std::size_t kMaxRounds = 500;
constexpr double kValueFloor = std::numeric_limits<double>::min();

struct Triple {
  std::size_t ij;
  std::size_t jk;
  std::size_t ik;
};

struct Violation {
  double sum = 0.0;
  double max = 0.0;
};

// Distances collapsed onto shared knots, plus the knot indices of every
// ordered triple of distinct states.
struct Constraints {
  std::vector<double> knot_distance;
  std::vector<Triple> triples;
  TNormKind tnorm;

  Violation evaluate(const std::vector<double>& values) const {
    Violation v;
    for (const Triple& c : triples) {
      const double required = tnorm_apply(tnorm, values[c.ij], values[c.jk]);
      const double hinge = std::max(0.0, required - values[c.ik]);
      v.sum += hinge;
      v.max = std::max(v.max, hinge);
    }
    return v;
  }

  // Subgradient of the summed hinge with respect to the knot values.
  std::vector<double> subgradient(const std::vector<double>& values) const {
    std::vector<double> g(values.size(), 0.0);
    for (const Triple& c : triples) {
      const double a = values[c.ij];
      const double b = values[c.jk];
      if (tnorm_apply(tnorm, a, b) <= values[c.ik]) {
        continue;
      }
      switch (tnorm) {
      case TNormKind::minimum:
        (a <= b ? g[c.ij] : g[c.jk]) += 1.0;
        break;
      case TNormKind::product:
        g[c.ij] += b;
        g[c.jk] += a;
        break;
      case TNormKind::lukasiewicz:
        g[c.ij] += 1.0;
        g[c.jk] += 1.0;
        break;
      }
      g[c.ik] -= 1.0;
    }
    return g;
  }
};

Constraints build_constraints(const EmbeddingProblem& p) {
  const std::size_t n = p.states.size();
  std::vector<double> d(n * n, 0.0);
  std::vector<double> all;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i * n + j] = d[j * n + i] = distance(p.states[i], p.states[j]);
      all.push_back(d[i * n + j]);
    }
  }
  std::sort(all.begin(), all.end());

  Constraints c{{}, {}, p.tnorm};
  for (double x : all) {
    if (c.knot_distance.empty() || x - c.knot_distance.back() > kKnotMergeTolerance) {
      c.knot_distance.push_back(x);
    }
  }
  const auto knot_of = [&](std::size_t i, std::size_t j) {
    const double x = d[i * n + j];
    const auto it = std::lower_bound(c.knot_distance.begin(), c.knot_distance.end(),
                                     x - kKnotMergeTolerance);
    return static_cast<std::size_t>(it - c.knot_distance.begin());
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) {
          continue;
        }
        c.triples.push_back({knot_of(i, j), knot_of(j, k), knot_of(i, k)});
      }
    }
  }
  return c;
}

double family_value(EmbeddingFamily family, double alpha, double d) {
  const double v = family == EmbeddingFamily::exponential ? std::exp(-alpha * d)
                                                          : 1.0 / (1.0 + alpha * d);
  return std::max(v, kValueFloor);
}

std::vector<double> family_values(EmbeddingFamily family, double alpha,
                                  const std::vector<double>& knots) {
  std::vector<double> v(knots.size());
  for (std::size_t k = 0; k < knots.size(); ++k) {
    v[k] = family_value(family, alpha, knots[k]);
  }
  return v;
}

struct Candidate {
  std::vector<double> values;
  Violation violation;
  std::optional<double> alpha;
  std::size_t iterations = 0;
};

Candidate search_parametric(const Constraints& c, EmbeddingFamily family) {
  const auto score = [&](double alpha) {
    return c.evaluate(family_values(family, alpha, c.knot_distance));
  };
  const double log_lo = std::log(kAlphaMin);
  const double log_hi = std::log(kAlphaMax);
  const auto alpha_at = [&](std::size_t m) {
    return std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(m) /
                                 static_cast<double>(kAlphaGridPoints - 1));
  };

  // Ascending scan with strict improvement: ties resolve to the smallest alpha.
  std::size_t best_m = 0;
  Violation best = score(alpha_at(0));
  for (std::size_t m = 1; m < kAlphaGridPoints; ++m) {
    const Violation v = score(alpha_at(m));
    if (v.sum < best.sum) {
      best = v;
      best_m = m;
    }
  }
  double best_alpha = alpha_at(best_m);
  std::size_t evaluations = kAlphaGridPoints;

  if (best.sum > 0.0) {
    // Golden-section refinement in log(alpha) over the neighbouring cells.
    double a = std::log(alpha_at(best_m == 0 ? 0 : best_m - 1));
    double b = std::log(alpha_at(std::min(best_m + 1, kAlphaGridPoints - 1)));
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - ratio * (b - a);
    double x2 = a + ratio * (b - a);
    double f1 = score(std::exp(x1)).sum;
    double f2 = score(std::exp(x2)).sum;
    evaluations += 2;
    for (std::size_t it = 0; it < kGoldenIterations; ++it) {
      if (f1 <= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - ratio * (b - a);
        f1 = score(std::exp(x1)).sum;
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + ratio * (b - a);
        f2 = score(std::exp(x2)).sum;
      }
      ++evaluations;
    }
    const double refined_alpha = std::exp(f1 <= f2 ? x1 : x2);
    const Violation refined = score(refined_alpha);
    if (refined.sum < best.sum) {
      best = refined;
      best_alpha = refined_alpha;
    }
  }
  return {family_values(family, best_alpha, c.knot_distance), best, best_alpha, evaluations};
}

// Projected subgradient descent: step against the hinge subgradient, then
// project back onto antitone sequences with PAV and clip into (0, 1].
Candidate search_isotonic_free(const Constraints& c, double t_star) {
  std::vector<double> values(c.knot_distance.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    values[k] = t_star / (t_star + c.knot_distance[k]);
  }
  const std::vector<double> unit_weights(values.size(), 1.0);

  Candidate best{values, c.evaluate(values), std::nullopt, 0};
  for (std::size_t round = 1; round <= kMaxRounds && best.violation.sum > kFeasibilityTolerance;
       ++round) {
    const std::vector<double> g = c.subgradient(values);
    double scale = 0.0;
    for (double x : g) {
      scale = std::max(scale, std::abs(x));
    }
    if (scale == 0.0) {
      break;
    }
    const double step = 0.1 / std::sqrt(static_cast<double>(round)) / scale;
    for (std::size_t k = 0; k < values.size(); ++k) {
      values[k] -= step * g[k];
    }
    values = isotonic_fit(values, unit_weights, Monotonicity::decreasing);
    for (double& v : values) {
      v = std::clamp(v, kValueFloor, 1.0);
    }
    const Violation v = c.evaluate(values);
    best.iterations = round;
    if (v.sum < best.violation.sum) {
      best.values = values;
      best.violation = v;
    }
  }
  return best;
}

} // namespace

std::string_view to_string(EmbeddingFamily f) {
  switch (f) {
  case EmbeddingFamily::exponential:
    return "exponential";
  case EmbeddingFamily::reciprocal:
    return "reciprocal";
  case EmbeddingFamily::isotonic_free:
    return "isotonic-free";
  }
  return "unknown";
}

EmbeddingFamily parse_embedding_family(std::string_view name) {
  for (EmbeddingFamily f : {EmbeddingFamily::exponential, EmbeddingFamily::reciprocal,
                            EmbeddingFamily::isotonic_free}) {
    if (name == to_string(f)) {
      return f;
    }
  }
  throw InvalidParameter("unknown embedding family '" + std::string(name) + "'");
}

MonotoneFit embedding_feasibility(const EmbeddingProblem& problem, double t_star) {
  if (problem.states.size() < 3) {
    throw InvalidInput("embedding feasibility needs at least 3 states, got " +
                       std::to_string(problem.states.size()));
  }
  for (std::size_t i = 0; i < problem.states.size(); ++i) {
    for (std::size_t j = i + 1; j < problem.states.size(); ++j) {
      if (problem.states[i] == problem.states[j]) {
        throw InvalidInput("embedding feasibility needs pairwise distinct states");
      }
    }
  }
  if (!std::isfinite(t_star) || t_star <= 0.0) {
    throw InvalidParameter("t_star must be finite and > 0");
  }

  const Constraints c = build_constraints(problem);
  const Candidate found = problem.family == EmbeddingFamily::isotonic_free
                              ? search_isotonic_free(c, t_star)
                              : search_parametric(c, problem.family);

  MonotoneFit fit;
  fit.family = problem.family;
  fit.tnorm = std::string(to_string(problem.tnorm));
  fit.t_star = t_star;
  fit.alpha = found.alpha;
  fit.knots.push_back({0.0, 1.0});
  for (std::size_t k = 0; k < c.knot_distance.size(); ++k) {
    fit.knots.push_back({c.knot_distance[k], found.values[k]});
  }
  fit.violation = found.violation.sum;
  fit.max_violation = found.violation.max;
  fit.feasible = fit.violation <= kFeasibilityTolerance;
  fit.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < fit.knots.size(); ++k) {
    fit.min_gap = std::min(fit.min_gap, fit.knots[k - 1].value - fit.knots[k].value);
  }
  fit.strictly_decreasing = fit.min_gap > 0.0;
  fit.constraints = c.triples.size();
  fit.iterations = found.iterations;
  return fit;
}

} // namespace qconcept
