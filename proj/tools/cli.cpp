#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qconcept/errors.hpp"
#include "qconcept/fuzzy.hpp"
#include "qconcept/nogo_lab.hpp"
#include "qconcept/random.hpp"
#include "qconcept/report.hpp"
#include "qconcept/tensor.hpp"

namespace qconcept::cli {

namespace {

const CLI::Validator kFinite(
    [](std::string& input) -> std::string {
      double v = 0.0;
      if (!CLI::detail::lexical_cast(input, v) || !std::isfinite(v)) {
        return "value " + input + " is not a finite number";
      }
      return {};
    },
    "FINITE");

const CLI::Validator kPositive(
    [](std::string& input) -> std::string {
      double v = 0.0;
      if (!CLI::detail::lexical_cast(input, v) || !std::isfinite(v) || !(v > 0.0)) {
        return "value " + input + " must be a finite number > 0";
      }
      return {};
    },
    "POSITIVE");

// Parameters shared by every subcommand.
struct Common {
  std::int64_t seed = 42;
  std::string format = "json";
  std::string output;
  bool schema = false;
};

struct StatePair {
  double mu1 = 5.0;
  double sigma1 = 1.0;
  double mu2 = 3.0;
  double sigma2 = 2.0;
};

struct GridFlags {
  std::optional<double> lo;
  std::optional<double> hi;
  std::size_t n = 2001;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  cmd->add_option("--format", c.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", c.output, "Write the report to this path instead of stdout");
  cmd->add_flag("--schema", c.schema, "Print the schema of this command's report");
}

void add_pair(CLI::App* cmd, StatePair& p) {
  cmd->add_option("--mu1", p.mu1, "Center of the first state")->check(kFinite)->capture_default_str();
  cmd->add_option("--sigma1", p.sigma1, "Width of the first state")
      ->check(kPositive)
      ->capture_default_str();
  cmd->add_option("--mu2", p.mu2, "Center of the second state")->check(kFinite)->capture_default_str();
  cmd->add_option("--sigma2", p.sigma2, "Width of the second state")
      ->check(kPositive)
      ->capture_default_str();
}

void add_grid(CLI::App* cmd, GridFlags& g) {
  cmd->add_option("--lo", g.lo, "Grid lower bound (default: 6 widths below)")->check(kFinite);
  cmd->add_option("--hi", g.hi, "Grid upper bound (default: 6 widths above)")->check(kFinite);
  cmd->add_option("--n", g.n, "Grid points")->check(CLI::Range(std::size_t{2}, std::size_t{10000000}))
      ->capture_default_str();
}

Json pair_params(const StatePair& p) {
  return Json{{"mu1", p.mu1}, {"sigma1", p.sigma1}, {"mu2", p.mu2}, {"sigma2", p.sigma2}};
}

class ArgumentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Grid resolve_grid(const GridFlags& flags, const GaussianState& a, const GaussianState& b) {
  const Grid fallback = default_grid(a, b, flags.n);
  const double lo = flags.lo.value_or(fallback.lo());
  const double hi = flags.hi.value_or(fallback.hi());
  if (!(lo < hi)) {
    throw ArgumentError("--hi: grid upper bound must exceed --lo");
  }
  return Grid(lo, hi, flags.n);
}

std::vector<GaussianState> parse_states(const std::vector<std::string>& specs, const char* flag) {
  std::vector<GaussianState> states;
  for (const std::string& spec : specs) {
    const auto colon = spec.find(':');
    double mu = 0.0;
    double sigma = 0.0;
    if (colon == std::string::npos || !CLI::detail::lexical_cast(spec.substr(0, colon), mu) ||
        !CLI::detail::lexical_cast(spec.substr(colon + 1), sigma) || !std::isfinite(mu) ||
        !std::isfinite(sigma) || sigma <= 0.0) {
      throw ArgumentError(std::string(flag) + ": expected mu:sigma with sigma > 0, got '" + spec +
                          "'");
    }
    states.emplace_back(mu, sigma);
  }
  return states;
}

Json states_param(const std::vector<GaussianState>& states) {
  Json list = Json::array();
  for (const auto& g : states) {
    list.push_back(to_json(g));
  }
  return list;
}

struct Outcome {
  Json report;
  int exit_code = kOk;
};

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum concept geometry versus fuzzy metric spaces: desk-scale experiments",
               "qconcept"};
  app.require_subcommand(1);

  Common common;
  StatePair pair;
  GridFlags grid;
  std::string op_name = "product";
  std::string tnorm_name = "product";
  std::string family_name = "exponential";
  std::vector<std::string> state_specs = {"5:1", "1:1", "3:2"};
  double tol = 1e-8;
  double delta = 0.1;
  double t_star = 1.0;
  std::size_t samples = 10000;
  std::size_t pairs = 100;
  bool inject_fault = false;

  std::map<std::string, std::function<Outcome()>> commands;

  auto* overlap_cmd = app.add_subcommand("overlap", "Closed-form and quadrature overlap of two states");
  add_pair(overlap_cmd, pair);
  overlap_cmd->add_option("--tol", tol, "Absolute quadrature tolerance")
      ->check(kPositive)
      ->capture_default_str();
  commands["overlap"] = [&] {
    const GaussianState a(pair.mu1, pair.sigma1);
    const GaussianState b(pair.mu2, pair.sigma2);
    Json params = pair_params(pair);
    params["tol"] = tol;
    Json r;
    r["states"] = states_param({a, b});
    r["overlap"] = overlap(a, b);
    r["fidelity"] = fidelity(a, b);
    r["overlap_quadrature"] = overlap_quadrature(a, b, tol);
    return Outcome{Json{{"report", r}, {"params", params}}};
  };

  auto* distance_cmd = app.add_subcommand("distance", "Hilbert distance between two states");
  add_pair(distance_cmd, pair);
  commands["distance"] = [&] {
    const GaussianState a(pair.mu1, pair.sigma1);
    const GaussianState b(pair.mu2, pair.sigma2);
    Json r;
    r["states"] = states_param({a, b});
    r["overlap"] = overlap(a, b);
    r["distance"] = distance(a, b);
    return Outcome{Json{{"report", r}, {"params", pair_params(pair)}}};
  };

  auto* interfere_cmd =
      app.add_subcommand("interfere", "Constructive/destructive combinations vs fuzzy images");
  add_pair(interfere_cmd, pair);
  add_grid(interfere_cmd, grid);
  interfere_cmd->add_option("--op", op_name, "Fuzzy connective (t-norm or t-conorm)")
      ->capture_default_str();
  commands["interfere"] = [&] {
    const GaussianState a(pair.mu1, pair.sigma1);
    const GaussianState b(pair.mu2, pair.sigma2);
    const Grid g = resolve_grid(grid, a, b);
    Json params = pair_params(pair);
    params["op"] = op_name;
    params["grid"] = to_json(g);
    return Outcome{Json{{"report", to_json(interference_experiment(a, b, g, parse_fuzzy_operator(op_name)))},
                        {"params", params}}};
  };

  auto* perturb_cmd = app.add_subcommand("perturb", "Shift the object center and compare distances");
  perturb_cmd->add_option("--delta", delta, "Shift of the object center")
      ->check(kFinite)
      ->capture_default_str();
  commands["perturb"] = [&] {
    return Outcome{Json{{"report", to_json(perturbation_experiment(delta))},
                        {"params", Json{{"delta", delta}}}}};
  };

  auto* ortho_cmd = app.add_subcommand("tensor-orthogonality",
                                       "Symmetric/antisymmetric tensor states and their overlap");
  add_pair(ortho_cmd, pair);
  ortho_cmd->add_option("--pairs", pairs, "Seeded random pairs in the sweep")->capture_default_str();
  commands["tensor-orthogonality"] = [&] {
    const GaussianState a(pair.mu1, pair.sigma1);
    const GaussianState b(pair.mu2, pair.sigma2);
    const PairTensor sym = symmetrize(a, b);
    const PairTensor anti = antisymmetrize(a, b);
    Json r;
    r["states"] = states_param({a, b});
    r["overlap"] = overlap(a, b);
    r["symmetric_coefficient"] = sym.terms()[0].coefficient;
    r["antisymmetric_coefficient"] = anti.terms()[0].coefficient;
    r["symmetric_norm_squared"] = tensor_inner_product(sym, sym);
    r["antisymmetric_norm_squared"] = tensor_inner_product(anti, anti);
    r["plus_minus_inner"] = tensor_inner_product(sym, anti);
    r["orthogonality_defect"] = orthogonality_defect(a, b);

    SeededRng rng(static_cast<std::uint64_t>(common.seed));
    double worst = 0.0;
    std::size_t tested = 0;
    while (tested < pairs) {
      const GaussianState x(rng.uniform(-10.0, 10.0), rng.uniform(0.2, 5.0));
      const GaussianState y(rng.uniform(-10.0, 10.0), rng.uniform(0.2, 5.0));
      if (-std::expm1(2.0 * log_overlap(x, y)) < 1e-12) {
        continue;
      }
      worst = std::max(worst, orthogonality_defect(x, y));
      ++tested;
    }
    r["sweep"] = Json{{"pairs", tested}, {"max_defect", worst}};
    Json params = pair_params(pair);
    params["pairs"] = pairs;
    return Outcome{Json{{"report", r}, {"params", params}}};
  };

  auto* axioms_cmd = app.add_subcommand("fuzzy-axioms", "Sampled fuzzy-metric axiom check");
  axioms_cmd->add_option("--tnorm", tnorm_name, "t-norm")->capture_default_str();
  axioms_cmd->add_option("--samples", samples, "Sampled triples")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000000}))
      ->capture_default_str();
  axioms_cmd->add_option("--states", state_specs, "Carrier as mu:sigma list")
      ->delimiter(',')
      ->capture_default_str();
  axioms_cmd->add_flag("--inject-fault", inject_fault,
                       "Corrupt M(x0, x0, t) to 0.5 for t > 0 to exercise the checker");
  commands["fuzzy-axioms"] = [&] {
    const StandardFuzzyMetric metric(parse_states(state_specs, "--states"), parse_tnorm(tnorm_name));
    const auto seed = static_cast<std::uint64_t>(common.seed);
    AxiomReport report;
    if (inject_fault) {
      const auto same = [&](std::size_t i, std::size_t j) {
        return metric.carrier()[i] == metric.carrier()[j];
      };
      const auto corrupted = [&](std::size_t i, std::size_t j, double t) {
        return (i == 0 && j == 0 && t > 0.0) ? 0.5 : metric_eval(metric, i, j, t);
      };
      report = check_fuzzy_metric_axioms(metric.carrier().size(), same, corrupted, metric.tnorm(),
                                         samples, seed);
    } else {
      report = axiom_check(metric, samples, seed);
    }
    Json params{{"tnorm", tnorm_name},
                {"samples", samples},
                {"states", states_param(metric.carrier())},
                {"inject_fault", inject_fault}};
    return Outcome{Json{{"report", to_json(report)}, {"params", params}}};
  };

  auto* embed_cmd = app.add_subcommand("embed-explore", "Search for a faithful monotone embedding");
  embed_cmd->add_option("--tnorm", tnorm_name, "t-norm")->capture_default_str();
  embed_cmd->add_option("--family", family_name, "exponential | reciprocal | isotonic-free")
      ->capture_default_str();
  embed_cmd->add_option("--t-star", t_star, "Fixed time t*")->check(kPositive)->capture_default_str();
  embed_cmd->add_option("--states", state_specs, "States as mu:sigma list")
      ->delimiter(',')
      ->capture_default_str();
  commands["embed-explore"] = [&] {
    EmbeddingProblem problem{parse_states(state_specs, "--states"), parse_tnorm(tnorm_name),
                             parse_embedding_family(family_name)};
    Json params{{"tnorm", tnorm_name},
                {"family", family_name},
                {"t_star", t_star},
                {"states", states_param(problem.states)}};
    return Outcome{Json{{"report", to_json(embedding_feasibility(problem, t_star))}, {"params", params}}};
  };

  auto* antisym_cmd =
      app.add_subcommand("antisym", "Symmetric vs antisymmetric composites, quantum and fuzzy");
  add_pair(antisym_cmd, pair);
  add_grid(antisym_cmd, grid);
  antisym_cmd->add_option("--op", op_name, "Fuzzy connective (t-norm or t-conorm)")
      ->capture_default_str();
  commands["antisym"] = [&] {
    const GaussianState a(pair.mu1, pair.sigma1);
    const GaussianState b(pair.mu2, pair.sigma2);
    const Grid g = resolve_grid(grid, a, b);
    Json params = pair_params(pair);
    params["op"] = op_name;
    params["grid"] = to_json(g);
    return Outcome{Json{{"report", to_json(antisymmetry_experiment(a, b, g, parse_fuzzy_operator(op_name)))},
                        {"params", params}}};
  };

  auto* table_cmd = app.add_subcommand("paper-table", "Reproduce every reference number");
  commands["paper-table"] = [&] {
    const auto rows = paper_table();
    Json r = to_json(rows);
    const bool ok = r["all_pass"].get<bool>();
    return Outcome{Json{{"report", r}, {"params", Json::object()}}, ok ? kOk : kAcceptanceMismatch};
  };

  for (CLI::App* cmd : {overlap_cmd, distance_cmd, interfere_cmd, perturb_cmd, ortho_cmd,
                        axioms_cmd, embed_cmd, antisym_cmd, table_cmd}) {
    add_common(cmd, common);
  }

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("qconcept");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : storage) {
    argv.push_back(s.data());
  }

  if (!args.empty() && !args.front().starts_with('-') && !commands.contains(args.front())) {
    err << "error: unknown command '" << args.front() << "'\n" << app.help();
    return kArgumentError;
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (app.get_subcommands().empty()) {
      err << app.help();
    }
    return kArgumentError;
  }

  CLI::App* selected = app.get_subcommands().front();
  const std::string name = selected->get_name();

  Outcome outcome;
  try {
    outcome = commands.at(name)();
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kArgumentError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kArgumentError;
  }

  Json report = outcome.report["report"];
  report["config"] = Json{{"command", name},
                          {"parameters", outcome.report["params"]},
                          {"seed", common.seed},
                          {"format", common.format},
                          {"output", common.output.empty() ? Json(nullptr) : Json(common.output)}};
  report["conventions"] = conventions();

  const std::string text = common.schema ? dump_json(schema_of(report))
                           : common.format == "csv" ? dump_csv(report)
                                                    : dump_json(report);
  if (common.output.empty() || common.schema) {
    out << text;
  } else {
    try {
      write_atomic(common.output, text);
    } catch (const IoError& e) {
      err << "error: " << e.what() << "\n";
      return kIoError;
    }
  }
  return outcome.exit_code;
}

} // namespace qconcept::cli
