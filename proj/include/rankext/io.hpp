#pragma once

// JSON encodings of fields, matrices, codes, maps, assignments and reports.
//
// Positions are 1-based on the wire. Matrices nested inside a code or map may
// omit their "field" (or be bare 2-D arrays); they inherit the enclosing one.
// Malformed input raises Error(InvalidInput).

#include "json.hpp"

#include "rankext/extend.hpp"

namespace rankext::io {

using Json = nlohmann::ordered_json;

Json to_json(const Field& field);
FieldPtr field_from_json(const Json& j);

Json to_json(const MatrixFq& m);
// `field` is used when the object carries no "field" key.
MatrixFq matrix_from_json(const Json& j, const FieldPtr& field = nullptr);

Json to_json(const RankCode& code);
RankCode code_from_json(const Json& j);

// {"domain": code, "images": [matrix, ...], "codomain"?: code}
Json to_json(const CodeMap& phi);
CodeMap map_from_json(const Json& j);

Json to_json(Position p);
Position position_from_json(const Json& j);
Json to_json(std::span<const Position> positions);
std::vector<Position> positions_from_json(const Json& j);

Json to_json(const ScalarAssignment& a);
ScalarAssignment assignment_from_json(const Json& j);

Json to_json(const ExtensionWitness& w);
Json to_json(const PropertyPWitness& w);
Json to_json(const Support& s);
Json to_json(const ReductionChain& chain);
Json path_report(const Path& path, const PathClassification& c);

Json error_json(ErrorCode code, std::string_view message);

}  // namespace rankext::io
