#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qconcept/state_geometry.hpp"
#include "qconcept/superposition.hpp"

namespace qconcept {

enum class TNormKind { minimum, product, lukasiewicz };
enum class TCoNormKind { maximum, probabilistic_sum, bounded_sum };

/// Either kind of pointwise fuzzy connective.
using FuzzyOperator = std::variant<TNormKind, TCoNormKind>;

inline constexpr std::array kAllTNorms = {TNormKind::minimum, TNormKind::product,
                                          TNormKind::lukasiewicz};
inline constexpr std::array kAllTCoNorms = {TCoNormKind::maximum, TCoNormKind::probabilistic_sum,
                                            TCoNormKind::bounded_sum};

std::string_view to_string(TNormKind k);
std::string_view to_string(TCoNormKind k);
std::string_view to_string(const FuzzyOperator& k);

/// Accepts "minimum", "product", "lukasiewicz", "maximum", "probabilistic-sum",
/// "bounded-sum". Throws InvalidParameter for anything else.
FuzzyOperator parse_fuzzy_operator(std::string_view name);
TNormKind parse_tnorm(std::string_view name);

/// Throw InvalidMembership unless a, b lie in [0, 1].
double tnorm_apply(TNormKind k, double a, double b);
double tconorm_apply(TCoNormKind k, double a, double b);
double fuzzy_apply(const FuzzyOperator& k, double a, double b);

/// Sampled membership function; every value lies in [0, 1] (checked, never clamped).
class MembershipGrid {
public:
  MembershipGrid(Grid grid, std::vector<double> values);

  const Grid& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return values_; }

private:
  Grid grid_;
  std::vector<double> values_;
};

/// Compact fingerprint of a membership grid for reports.
struct MembershipDigest {
  std::uint64_t fnv1a = 0; ///< FNV-1a over the IEEE-754 bytes of the values
  double min = 0.0;
  double max = 0.0;
  double argmax = 0.0;
  double area = 0.0; ///< trapezoidal integral over the grid
};

MembershipDigest digest(const MembershipGrid& m);

/// Peak-normalized squared amplitude |psi(x)|^2 / max_j |psi(x_j)|^2.
/// Throws DegenerateMembership when every sampled amplitude is zero.
MembershipGrid membership_from_state(const LinearCombination& u, const Grid& grid);
MembershipGrid membership_from_state(const GaussianState& g, const Grid& grid);

/// Pointwise application; throws GridMismatch for different grids.
MembershipGrid fuzzy_combine(const MembershipGrid& a, const MembershipGrid& b,
                             const FuzzyOperator& k);

/// M(x, y, t) = t / (t + d_Q(x, y)) on a finite carrier of Gaussian states.
class StandardFuzzyMetric {
public:
  StandardFuzzyMetric(std::vector<GaussianState> carrier, TNormKind tnorm);

  const std::vector<GaussianState>& carrier() const noexcept { return carrier_; }
  TNormKind tnorm() const noexcept { return tnorm_; }

private:
  std::vector<GaussianState> carrier_;
  TNormKind tnorm_;
};

double metric_eval(const StandardFuzzyMetric& f, std::size_t i, std::size_t j, double t);

struct AxiomWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  double t = 0.0;
  double s = 0.0;
};

struct AxiomOutcome {
  int axiom = 0;
  std::string statement;
  std::size_t checks = 0;
  std::size_t violations = 0;
  double worst_violation = 0.0; ///< magnitude of the worst failure, 0 when clean
  AxiomWitness worst_witness;   ///< meaningful only when violations > 0
};

struct AxiomReport {
  std::string tnorm;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t carrier_size = 0;
  std::array<AxiomOutcome, 5> axioms;
  double max_increment_ratio = 0.0; ///< largest |M(t+h) - M(t)| / h seen by the continuity probe
  double lipschitz_bound = 0.0;
  double step_relative = 0.0;
  std::size_t total_violations() const;
};

struct AxiomCheckOptions {
  double t_min = 1e-3;
  double t_max = 1e3;
  std::size_t time_grid_points = 601; ///< log-uniform grid on [t_min, t_max]
  double step_relative = 1e-6;        ///< continuity probe step h = step_relative * t
  double lipschitz_bound = 1e6;
};

/// Generic membership function over carrier indices.
using FuzzyMetricFn = std::function<double(std::size_t, std::size_t, double)>;

/// Sampled check of the five fuzzy-metric axioms. `same_point(i, j)` decides
/// point identity for the second axiom. Deterministic in (samples, seed).
AxiomReport check_fuzzy_metric_axioms(std::size_t carrier_size,
                                      const std::function<bool(std::size_t, std::size_t)>& same_point,
                                      const FuzzyMetricFn& m, TNormKind tnorm,
                                      std::size_t samples, std::uint64_t seed,
                                      const AxiomCheckOptions& options = {});

AxiomReport axiom_check(const StandardFuzzyMetric& f, std::size_t samples, std::uint64_t seed,
                        const AxiomCheckOptions& options = {});

} // namespace qconcept
