#include "qconcept/fuzzy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qconcept/errors.hpp"

namespace qconcept {

namespace {

void require_unit(double a, double b) {
  if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0)) {
    throw InvalidMembership("membership degrees must lie in [0, 1], got (" + std::to_string(a) +
                            ", " + std::to_string(b) + ")");
  }
}

template <typename Op>
MembershipGrid pointwise(const MembershipGrid& a, const MembershipGrid& b, Op op) {
  if (!(a.grid() == b.grid())) {
    throw GridMismatch("membership grids differ");
  }
  std::vector<double> out(a.values().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = op(a.values()[i], b.values()[i]);
  }
  return MembershipGrid(a.grid(), std::move(out));
}

} // namespace

std::string_view to_string(TNormKind k) {
  switch (k) {
  case TNormKind::minimum:
    return "minimum";
  case TNormKind::product:
    return "product";
  case TNormKind::lukasiewicz:
    return "lukasiewicz";
  }
  return "unknown";
}

std::string_view to_string(TCoNormKind k) {
  switch (k) {
  case TCoNormKind::maximum:
    return "maximum";
  case TCoNormKind::probabilistic_sum:
    return "probabilistic-sum";
  case TCoNormKind::bounded_sum:
    return "bounded-sum";
  }
  return "unknown";
}

std::string_view to_string(const FuzzyOperator& k) {
  return std::visit([](auto kind) { return to_string(kind); }, k);
}

FuzzyOperator parse_fuzzy_operator(std::string_view name) {
  for (TNormKind k : kAllTNorms) {
    if (name == to_string(k)) {
      return k;
    }
  }
  for (TCoNormKind k : kAllTCoNorms) {
    if (name == to_string(k)) {
      return k;
    }
  }
  throw InvalidParameter("unknown fuzzy operator '" + std::string(name) + "'");
}

TNormKind parse_tnorm(std::string_view name) {
  const FuzzyOperator op = parse_fuzzy_operator(name);
  if (const auto* k = std::get_if<TNormKind>(&op)) {
    return *k;
  }
  throw InvalidParameter("'" + std::string(name) + "' is a t-conorm, expected a t-norm");
}

// Every connective is evaluated on (lo, hi) = (min, max) of its arguments, so
// commutativity holds bitwise. The forms below also keep the identity element
// and monotonicity exact in floating point.
double tnorm_apply(TNormKind k, double a, double b) {
  require_unit(a, b);
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  switch (k) {
  case TNormKind::minimum:
    return lo;
  case TNormKind::product:
    return lo * hi;
  case TNormKind::lukasiewicz:
    return std::max(0.0, lo - (1.0 - hi));
  }
  return 0.0;
}

double tconorm_apply(TCoNormKind k, double a, double b) {
  require_unit(a, b);
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  switch (k) {
  case TCoNormKind::maximum:
    return hi;
  case TCoNormKind::probabilistic_sum:
    return std::min(1.0, hi + lo * (1.0 - hi));
  case TCoNormKind::bounded_sum:
    return std::min(1.0, lo + hi);
  }
  return 0.0;
}

double fuzzy_apply(const FuzzyOperator& k, double a, double b) {
  return std::visit(
      [a, b](auto kind) {
        if constexpr (std::is_same_v<decltype(kind), TNormKind>) {
          return tnorm_apply(kind, a, b);
        } else {
          return tconorm_apply(kind, a, b);
        }
      },
      k);
}

MembershipGrid::MembershipGrid(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw InvalidInput("membership grid has " + std::to_string(values_.size()) +
                       " values for " + std::to_string(grid_.size()) + " points");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] >= 0.0 && values_[i] <= 1.0)) {
      throw InvalidMembership("membership value " + std::to_string(values_[i]) +
                              " at index " + std::to_string(i) + " is outside [0, 1]");
    }
  }
}

MembershipDigest digest(const MembershipGrid& m) {
  MembershipDigest d;
  d.fnv1a = 0xcbf29ce484222325ULL;
  const auto& v = m.values();
  d.min = v.front();
  d.max = v.front();
  d.argmax = m.grid().point(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto bits = std::bit_cast<std::uint64_t>(v[i]);
    for (int byte = 0; byte < 8; ++byte) {
      d.fnv1a ^= bits & 0xffU;
      d.fnv1a *= 0x100000001b3ULL;
      bits >>= 8;
    }
    if (v[i] < d.min) {
      d.min = v[i];
    }
    if (v[i] > d.max) {
      d.max = v[i];
      d.argmax = m.grid().point(i);
    }
    if (i > 0) {
      d.area += 0.5 * (v[i] + v[i - 1]) * m.grid().spacing();
    }
  }
  return d;
}

MembershipGrid membership_from_state(const LinearCombination& u, const Grid& grid) {
  std::vector<double> density(grid.size());
  double peak = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double a = evaluate(u, grid.point(i));
    density[i] = a * a;
    peak = std::max(peak, density[i]);
  }
  if (!(peak > 0.0)) {
    throw DegenerateMembership("state amplitude vanishes on every grid point");
  }
  for (double& v : density) {
    v /= peak;
  }
  return MembershipGrid(grid, std::move(density));
}

MembershipGrid membership_from_state(const GaussianState& g, const Grid& grid) {
  return membership_from_state(LinearCombination(g), grid);
}

MembershipGrid fuzzy_combine(const MembershipGrid& a, const MembershipGrid& b,
                             const FuzzyOperator& k) {
  return pointwise(a, b, [&k](double x, double y) { return fuzzy_apply(k, x, y); });
}

StandardFuzzyMetric::StandardFuzzyMetric(std::vector<GaussianState> carrier, TNormKind tnorm)
    : carrier_(std::move(carrier)), tnorm_(tnorm) {
  if (carrier_.empty()) {
    throw InvalidInput("fuzzy metric carrier must be non-empty");
  }
}

double metric_eval(const StandardFuzzyMetric& f, std::size_t i, std::size_t j, double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw InvalidParameter("fuzzy metric time must be finite and >= 0, got " + std::to_string(t));
  }
  if (i >= f.carrier().size() || j >= f.carrier().size()) {
    throw InvalidParameter("carrier index out of range");
  }
  if (t == 0.0) {
    return 0.0;
  }
  return t / (t + distance(f.carrier()[i], f.carrier()[j]));
}

} // namespace qconcept
