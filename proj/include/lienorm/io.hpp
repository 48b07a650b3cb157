#pragma once

#include "lienorm/lie_structure.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lienorm {

using Json = nlohmann::json;

/// An abstract pair: bracket table plus h as coordinate vectors.
struct AbstractPair {
  StructureConstants structure;
  Subspace h;
};

/// One input document. Either fields or abstract (or both) are present.
struct AlgebraInput {
  std::vector<std::string> variables;
  std::vector<std::vector<std::string>> fields;
  std::optional<AbstractPair> abstract;
  Json meta = Json::object();

  bool has_fields() const { return !fields.empty(); }
  std::string name() const;
  /// Throws InputError on parse failures, NotIndependent or NotClosed.
  VectorFieldAlgebra algebra() const;
};

/// Document layout:
///   {"variables": [...], "fields": [[coefficient strings]...],
///    "abstract": {"dimension": m, "brackets": [[i, j, [c_1..c_m]]...], "h": [[...]...]},
///    "meta": {...}}
/// Indices in "brackets" are 1-based with i < j; coefficients are strings "p/q".
/// Throws InputError on any schema violation.
AlgebraInput parse_input(const Json& doc);
AlgebraInput parse_input_text(const std::string& text);
AlgebraInput load_input(const std::string& path);
Json to_json(const AlgebraInput& in);

Json to_json(const Rational& r);
Json to_json(const QVector& v);
Json to_json(const Subspace& s);
/// Coefficient strings of a field in its chart's variable names.
Json to_json(const VectorField& v);
Json to_json(const JetField& v);
Rational rational_from_json(const Json& j);

/// Bracket table in the sparse layout used by "abstract".
Json structure_to_json(const StructureConstants& s);

/// Stable text rendering: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace lienorm
