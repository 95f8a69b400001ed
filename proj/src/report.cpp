#include "qconcept/report.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace qconcept {

namespace {

std::string hex64(std::uint64_t v) {
  std::array<char, 19> buf{};
  std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(v));
  return buf.data();
}

std::string scalar_text(const Json& v, bool for_csv) {
  if (v.is_number_float()) {
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
      return for_csv ? (std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf")) : "null";
    }
    return format_number(x);
  }
  if (v.is_string()) {
    return for_csv ? v.get<std::string>() : v.dump();
  }
  if (v.is_null()) {
    return for_csv ? "" : "null";
  }
  return v.dump(); // integers and booleans
}

void dump_into(std::ostringstream& out, const Json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (const auto& [key, item] : v.items()) {
      if (!first) {
        out << ",\n";
      }
      first = false;
      out << pad << Json(key).dump() << ": ";
      dump_into(out, item, depth + 1);
    }
    out << "\n" << close_pad << "}";
  } else if (v.is_array()) {
    if (v.empty()) {
      out << "[]";
      return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) {
        out << ",\n";
      }
      out << pad;
      dump_into(out, v[i], depth + 1);
    }
    out << "\n" << close_pad << "]";
  } else {
    out << scalar_text(v, false);
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  return quoted + "\"";
}

struct Flat {
  std::vector<std::pair<std::string, std::string>> scalars;
  std::vector<std::pair<std::string, const Json*>> lists;
};

void flatten(const Json& v, const std::string& prefix, Flat& out, bool lists_as_cells) {
  for (const auto& [key, item] : v.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (item.is_object()) {
      flatten(item, name, out, lists_as_cells);
    } else if (item.is_array()) {
      if (lists_as_cells) {
        out.scalars.emplace_back(name, dump_json(item));
      } else {
        out.lists.emplace_back(name, &item);
      }
    } else {
      out.scalars.emplace_back(name, scalar_text(item, true));
    }
  }
}

std::string join_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) {
      row += ',';
    }
    row += csv_cell(cells[i]);
  }
  return row + "\n";
}

} // namespace

std::string format_number(double x) {
  if (x == 0.0) {
    return "0"; // also folds -0
  }
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 9);
  return std::string(buf.data(), res.ptr);
}

Json to_json(const GaussianState& g) {
  return Json{{"center", g.center()}, {"width", g.width()}};
}

Json to_json(const Grid& g) {
  return Json{{"lo", g.lo()}, {"hi", g.hi()}, {"n", g.size()}};
}

Json to_json(const MembershipDigest& d) {
  return Json{{"fnv1a", hex64(d.fnv1a)}, {"min", d.min},   {"max", d.max},
              {"argmax", d.argmax},      {"area", d.area}};
}

Json to_json(const InterferenceReport& r) {
  Json j;
  j["pair"] = Json::array({to_json(r.psi), to_json(r.phi)});
  j["operator"] = r.op;
  j["grid"] = to_json(r.grid);
  j["overlap"] = r.overlap;
  j["d_plus"] = r.d_plus;
  j["d_minus"] = r.d_minus;
  j["d_psi_phi"] = r.d_psi_phi;
  j["quantum_gap"] = r.quantum_gap;
  j["minus_more_distinguishable"] = r.d_minus > r.d_plus;
  j["fuzzy_plus"] = to_json(r.fuzzy_plus);
  j["fuzzy_minus"] = to_json(r.fuzzy_minus);
  j["fuzzy_identical"] = r.fuzzy_identical;
  return j;
}

Json to_json(const AntisymmetryReport& r) {
  Json j;
  j["pair"] = Json::array({to_json(r.psi), to_json(r.phi)});
  j["operator"] = r.op;
  j["grid"] = to_json(r.grid);
  j["overlap"] = r.overlap;
  j["plus_minus_inner"] = r.plus_minus_inner;
  j["orthogonality_defect"] = r.orthogonality_defect;
  j["plus_norm"] = r.plus_norm;
  j["minus_norm"] = r.minus_norm;
  j["hilbert_distance"] = r.hilbert_distance;
  j["quantum_distinguishable"] = r.quantum_distinguishable;
  j["fuzzy_forward"] = to_json(r.fuzzy_forward);
  j["fuzzy_reverse"] = to_json(r.fuzzy_reverse);
  j["fuzzy_bitwise_equal"] = r.fuzzy_bitwise_equal;
  j["verdict"] = std::string(r.quantum_distinguishable ? "distinguishable" : "indistinguishable") +
                 " in Hilbert space; " +
                 (r.fuzzy_bitwise_equal ? "indistinguishable" : "distinguishable") +
                 " in fuzzy composition";
  return j;
}

Json to_json(const AxiomReport& r) {
  Json j;
  j["tnorm"] = r.tnorm;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["carrier_size"] = r.carrier_size;
  j["total_violations"] = r.total_violations();
  j["max_increment_ratio"] = r.max_increment_ratio;
  j["lipschitz_bound"] = r.lipschitz_bound;
  j["step_relative"] = r.step_relative;
  Json axioms = Json::array();
  for (const AxiomOutcome& a : r.axioms) {
    Json w{{"i", nullptr}, {"j", nullptr}, {"k", nullptr}, {"t", nullptr}, {"s", nullptr}};
    if (a.violations > 0) {
      w = Json{{"i", a.worst_witness.i},
               {"j", a.worst_witness.j},
               {"k", a.worst_witness.k},
               {"t", a.worst_witness.t},
               {"s", a.worst_witness.s}};
    }
    axioms.push_back(Json{{"axiom", a.axiom},
                          {"statement", a.statement},
                          {"checks", a.checks},
                          {"violations", a.violations},
                          {"worst_violation", a.worst_violation},
                          {"worst_witness", w}});
  }
  j["axioms"] = axioms;
  return j;
}

Json to_json(const MonotoneFit& f) {
  Json j;
  j["family"] = std::string(to_string(f.family));
  j["tnorm"] = f.tnorm;
  j["t_star"] = f.t_star;
  j["alpha"] = f.alpha ? Json(*f.alpha) : Json(nullptr);
  j["violation"] = f.violation;
  j["max_violation"] = f.max_violation;
  j["feasible"] = f.feasible;
  j["feasibility_tolerance"] = kFeasibilityTolerance;
  j["strictly_decreasing"] = f.strictly_decreasing;
  j["min_gap"] = f.min_gap;
  j["constraints"] = f.constraints;
  j["iterations"] = f.iterations;
  Json knots = Json::array();
  for (const FitKnot& k : f.knots) {
    knots.push_back(Json{{"distance", k.distance}, {"value", k.value}});
  }
  j["knots"] = knots;
  j["verdict"] = std::string(f.feasible ? "feasible" : "infeasible") + " within family " +
                 std::string(to_string(f.family)) + " at tolerance 1e-09";
  return j;
}

Json to_json(const PerturbationResult& r) {
  Json j;
  j["delta"] = r.delta;
  j["car"] = to_json(concepts::car());
  j["boat"] = to_json(concepts::boat());
  j["shifted_object"] = to_json(r.shifted_object);
  j["d_car"] = r.d_car;
  j["d_boat"] = r.d_boat;
  j["ordering"] = std::string(to_string(r.ordering));
  return j;
}

Json to_json(const std::vector<TableRow>& rows) {
  Json j;
  Json list = Json::array();
  bool all = true;
  for (const TableRow& r : rows) {
    list.push_back(Json{{"name", r.name},
                        {"computed", r.computed},
                        {"reference", r.reference},
                        {"quoted", r.quoted},
                        {"source", r.source},
                        {"tolerance", r.tolerance},
                        {"pass", r.pass}});
    all = all && r.pass;
  }
  j["all_pass"] = all;
  j["rows"] = list;
  return j;
}

Json conventions() {
  return Json{
      {"wavefunction", "psi(x) = (2 pi sigma^2)^(-1/4) exp(-(x - mu)^2 / (4 sigma^2))"},
      {"membership", "peak-normalized squared amplitude |psi(x)|^2 / max |psi|^2"},
      {"fuzzy_metric", "M(x, y, t) = t / (t + d_Q(x, y)), M(x, y, 0) = 0"},
      {"embedding_surrogate",
       "time-collapsed: f(d_ik) >= T(f(d_ij), f(d_jk)) at a single fixed t"},
      {"embedding_monotonicity", "f antitone (non-increasing) with f(0) = 1"},
  };
}

std::string dump_json(const Json& value) {
  std::ostringstream out;
  dump_into(out, value, 0);
  out << "\n";
  return out.str();
}

std::string dump_csv(const Json& value) {
  Flat flat;
  flatten(value, "", flat, false);
  std::string out;
  std::vector<std::string> header;
  std::vector<std::string> row;
  for (const auto& [k, v] : flat.scalars) {
    header.push_back(k);
    row.push_back(v);
  }
  out += join_row(header);
  out += join_row(row);

  for (const auto& [name, list] : flat.lists) {
    out += "\n";
    // Column set is the union over elements, in first-seen order.
    std::vector<std::string> columns = {"list", "index"};
    std::vector<std::map<std::string, std::string>> cells(list->size());
    for (std::size_t i = 0; i < list->size(); ++i) {
      const Json& item = (*list)[i];
      Flat element;
      if (item.is_object()) {
        flatten(item, "", element, true);
      } else {
        element.scalars.emplace_back(
            "value", item.is_array() ? dump_json(item) : scalar_text(item, true));
      }
      for (auto& [k, v] : element.scalars) {
        if (std::find(columns.begin(), columns.end(), k) == columns.end()) {
          columns.push_back(k);
        }
        cells[i][k] = v;
      }
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < list->size(); ++i) {
      std::vector<std::string> row_cells = {name, std::to_string(i)};
      for (std::size_t c = 2; c < columns.size(); ++c) {
        const auto it = cells[i].find(columns[c]);
        row_cells.push_back(it == cells[i].end() ? "" : it->second);
      }
      rows.push_back(std::move(row_cells));
    }
    out += join_row(columns);
    for (const auto& r : rows) {
      out += join_row(r);
    }
  }
  return out;
}

Json schema_of(const Json& value) {
  if (value.is_object()) {
    Json props = Json::object();
    Json required = Json::array();
    for (const auto& [key, item] : value.items()) {
      props[key] = schema_of(item);
      required.push_back(key);
    }
    return Json{{"type", "object"}, {"properties", props}, {"required", required}};
  }
  if (value.is_array()) {
    return value.empty() ? Json{{"type", "array"}}
                         : Json{{"type", "array"}, {"items", schema_of(value[0])}};
  }
  if (value.is_boolean()) {
    return Json{{"type", "boolean"}};
  }
  if (value.is_number_integer()) {
    return Json{{"type", "integer"}};
  }
  if (value.is_number()) {
    return Json{{"type", "number"}};
  }
  if (value.is_string()) {
    return Json{{"type", "string"}};
  }
  return Json{{"type", "null"}};
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open " + tmp.string() + " for writing");
    }
    out << content;
    out.flush();
    if (!out) {
      throw IoError("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move report into place at " + path.string());
  }
}

} // namespace qconcept
