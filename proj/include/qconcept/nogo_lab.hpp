#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qconcept/fuzzy.hpp"
#include "qconcept/state_geometry.hpp"
#include "qconcept/superposition.hpp"
#include "qconcept/tensor.hpp"

namespace qconcept {

/// The three reference concepts used throughout the experiments.
namespace concepts {
inline GaussianState car() { return GaussianState(5.0, 1.0); }
inline GaussianState boat() { return GaussianState(1.0, 1.0); }
inline GaussianState object() { return GaussianState(3.0, 2.0); }
} // namespace concepts

/// Grid covering both states out to `widths` standard deviations.
Grid default_grid(const GaussianState& a, const GaussianState& b, std::size_t n = 2001,
                  double widths = 6.0);

// ---------------------------------------------------------------------------
// Interference

struct InterferenceReport {
  GaussianState psi;
  GaussianState phi;
  std::string op;
  Grid grid;
  double overlap = 0.0;
  double d_plus = 0.0;    ///< ||psi_+ - phi||
  double d_minus = 0.0;   ///< ||psi_- - phi||
  double d_psi_phi = 0.0; ///< ||psi - phi||, for the reading that compares against psi itself
  double quantum_gap = 0.0;
  MembershipDigest fuzzy_plus{};
  MembershipDigest fuzzy_minus{};
  bool fuzzy_identical = false;
};

/// Builds psi_+/- and their quantum distances to phi, and the fuzzy images
/// of the + and - composites. The fuzzy side only sees |amplitude|^2, so the
/// two images are computed from +phi and -phi and compared bitwise.
InterferenceReport interference_experiment(const GaussianState& psi, const GaussianState& phi,
                                           const Grid& grid, const FuzzyOperator& op);

// ---------------------------------------------------------------------------
// Perturbation

enum class Ordering { less, equal, greater };
std::string_view to_string(Ordering o);

struct PerturbationResult {
  double delta = 0.0;
  GaussianState shifted_object{3.0, 2.0};
  double d_car = 0.0;  ///< d_Q(car, object shifted by delta)
  double d_boat = 0.0; ///< d_Q(boat, object shifted by delta)
  Ordering ordering = Ordering::equal; ///< d_car compared with d_boat
};

PerturbationResult perturbation_experiment(double delta);

// ---------------------------------------------------------------------------
// Reference number table

struct TableRow {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  std::string quoted; ///< reference as printed, e.g. "~0.536" or "sqrt(2)"
  std::string source; ///< "quoted" for printed reference values, "closed-form" for derived ones
  double tolerance = 0.0;
  bool pass = false;
};

std::vector<TableRow> paper_table();

// ---------------------------------------------------------------------------
// Embedding feasibility

enum class EmbeddingFamily { exponential, reciprocal, isotonic_free };
std::string_view to_string(EmbeddingFamily f);
EmbeddingFamily parse_embedding_family(std::string_view name);

struct EmbeddingProblem {
  std::vector<GaussianState> states;
  TNormKind tnorm = TNormKind::product;
  EmbeddingFamily family = EmbeddingFamily::exponential;
};

struct FitKnot {
  double distance;
  double value;
};

struct MonotoneFit {
  EmbeddingFamily family = EmbeddingFamily::exponential;
  std::string tnorm;
  double t_star = 0.0;
  std::optional<double> alpha;  ///< parametric families only
  std::vector<FitKnot> knots;   ///< ascending distance, first knot is (0, 1)
  double violation = 0.0;       ///< summed hinge violation over ordered triples
  double max_violation = 0.0;   ///< largest single hinge
  bool feasible = false;        ///< violation <= 1e-9
  bool strictly_decreasing = false;
  double min_gap = 0.0;         ///< smallest drop between consecutive knot values
  std::size_t constraints = 0;
  std::size_t iterations = 0;
};

inline constexpr double kFeasibilityTolerance = 1e-9;

/// Searches `family` for an antitone f with f(0) = 1 minimizing the hinge
/// violation of f(d_ik) >= T(f(d_ij), f(d_jk)) over ordered triples of
/// distinct states. Throws InvalidInput for fewer than 3 or repeated states.
MonotoneFit embedding_feasibility(const EmbeddingProblem& problem, double t_star);

// ---------------------------------------------------------------------------
// Antisymmetry

struct AntisymmetryReport {
  GaussianState psi;
  GaussianState phi;
  std::string op;
  Grid grid;
  double overlap = 0.0;
  double plus_minus_inner = 0.0; ///< <Psi+|Psi->
  double orthogonality_defect = 0.0;
  double plus_norm = 0.0;
  double minus_norm = 0.0;
  double hilbert_distance = 0.0; ///< ||Psi+ - Psi-||
  bool quantum_distinguishable = false;
  MembershipDigest fuzzy_forward{}; ///< F(mu_psi, mu_phi)
  MembershipDigest fuzzy_reverse{}; ///< F(mu_phi, mu_psi)
  bool fuzzy_bitwise_equal = false;
};

AntisymmetryReport antisymmetry_experiment(const GaussianState& psi, const GaussianState& phi,
                                           const Grid& grid, const FuzzyOperator& op);

/// Exact bitwise equality of two membership grids' values.
bool bitwise_equal(const MembershipGrid& a, const MembershipGrid& b);

} // namespace qconcept
