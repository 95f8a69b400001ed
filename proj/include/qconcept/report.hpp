#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qconcept/errors.hpp"
#include "qconcept/fuzzy.hpp"
#include "qconcept/nogo_lab.hpp"

namespace qconcept {

using Json = nlohmann::ordered_json;

class IoError : public Error {
public:
  using Error::Error;
};

/// Shortest locale-independent rendering with at most 9 significant digits.
std::string format_number(double x);

Json to_json(const GaussianState& g);
Json to_json(const Grid& g);
Json to_json(const MembershipDigest& d);
Json to_json(const InterferenceReport& r);
Json to_json(const AntisymmetryReport& r);
Json to_json(const AxiomReport& r);
Json to_json(const MonotoneFit& f);
Json to_json(const PerturbationResult& r);
Json to_json(const std::vector<TableRow>& rows);

/// The modelling conventions every report records.
Json conventions();

/// Serializes with keys in insertion order and numbers via format_number.
std::string dump_json(const Json& value);

/// Scalars (nested objects flattened to dotted names) as a header row and a
/// value row; then, per list, a header row and one row per element tagged
/// with the list name and an index column.
std::string dump_csv(const Json& value);

/// JSON-Schema-style description of the shape of `value`.
Json schema_of(const Json& value);

/// Writes to a temporary sibling then renames over `path`. Throws IoError.
void write_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace qconcept
