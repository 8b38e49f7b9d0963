#pragma once

#include "hlm/classify.hpp"
#include "hlm/representation.hpp"
#include "hlm/spinor.hpp"
#include "hlm/weyl.hpp"

#include <json.hpp>

#include <string>

namespace hlm {

/// Insertion-ordered JSON, so dumps are deterministic and follow construction order.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const ParameterPoint& p);
ParameterPoint point_from_json(const Json& j);

/// {"family", "parameters", "generators", "brackets": [{"a", "b", "coeffs": {gen: poly}}]}; nonzero pairs only.
Json to_json(const StructureConstants& sc);
StructureConstants structure_constants_from_json(const Json& j);

/// Row-major list of exact strings.
Json to_json(const CMatrix& m);
CMatrix cmatrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

/// {"dim", "provenance", "point"?, "images": {gen: entries}}
Json to_json(const Representation& rep);
Representation representation_from_json(const Json& j);

/// [{"xi": [..], "d": [..], "c": "..."}] in term order.
Json to_json(const WeylElement& w);
WeylElement weyl_from_json(const Json& j);

/// {"dim", "entries": row-major list of Weyl elements}
Json to_json(const MatrixWeylOperator& op);
MatrixWeylOperator operator_from_json(const Json& j);

Json to_json(const Inertia& in);
Json to_json(const EmbeddingCoefficients& e);
Json to_json(const ClassificationReport& r);

/// {"schema_version", "kind", "data"}; kind is algebra, representation or operator.
Json export_document(const std::string& kind, Json data);
/// Parses text and checks the schema version; throws ParseError.
Json read_document(const std::string& text);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace hlm
