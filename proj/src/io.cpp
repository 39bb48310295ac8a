#include "rankext/io.hpp"

#include <string>

namespace rankext::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with key \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
  return *it;
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

int positive_int(const Json& j, const char* what) {
  const std::int64_t v = integer(j, what);
  if (v < 1 || v > 4096) bad(std::string(what) + " must lie in 1..4096");
  return static_cast<int>(v);
}

FieldPtr field_of(const Json& j, const FieldPtr& fallback) {
  if (j.is_object() && j.contains("field")) {
    FieldPtr f = field_from_json(j["field"]);
    if (fallback && !same_field(f, fallback)) throw Error(ErrorCode::FieldMismatch, "nested field differs");
    return f;
  }
  if (!fallback) bad("missing key \"field\"");
  return fallback;
}

}  // namespace

Json to_json(const Field& field) {
  Json j{{"p", field.p()}, {"k", field.k()}};
  if (field.k() > 1) j["modulus"] = field.modulus();
  return j;
}

FieldPtr field_from_json(const Json& j) {
  const std::int64_t p = integer(member(j, "p"), "p");
  const std::int64_t k = j.contains("k") ? integer(j["k"], "k") : 1;
  if (p < 2 || p > kMaxFieldOrder) throw Error(ErrorCode::NotPrime, "p out of range");
  if (k < 1 || k > 16) throw Error(ErrorCode::FieldTooLarge, "k out of range");
  std::optional<Polynomial> modulus;
  if (j.contains("modulus")) {
    const Json& mj = j["modulus"];
    if (!mj.is_array()) bad("modulus must be an array of coefficients");
    Polynomial poly;
    for (const Json& c : mj) {
      const std::int64_t v = integer(c, "modulus coefficient");
      if (v < 0) bad("modulus coefficients must be non-negative");
      poly.push_back(static_cast<std::uint32_t>(v));
    }
    modulus = std::move(poly);
  }
  return make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k), std::move(modulus));
}

Json to_json(const MatrixFq& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return Json{{"field", to_json(m.f())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

MatrixFq matrix_from_json(const Json& j, const FieldPtr& field) {
  const FieldPtr f = field_of(j, field);
  const Json& entries = j.is_array() ? j : member(j, "entries");
  if (!entries.is_array() || entries.empty()) bad("entries must be a non-empty array of rows");
  const auto rows = static_cast<int>(entries.size());
  if (!entries[0].is_array() || entries[0].empty()) bad("matrix rows must be non-empty arrays");
  const auto cols = static_cast<int>(entries[0].size());
  if (j.is_object()) {
    if (j.contains("rows") && positive_int(j["rows"], "rows") != rows) {
      throw Error(ErrorCode::DimensionMismatch, "\"rows\" disagrees with the entries");
    }
    if (j.contains("cols") && positive_int(j["cols"], "cols") != cols) {
      throw Error(ErrorCode::DimensionMismatch, "\"cols\" disagrees with the entries");
    }
  }
  Entries e(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = entries[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    }
    for (int c = 0; c < cols; ++c) {
      const std::int64_t v = integer(row[static_cast<std::size_t>(c)], "matrix entry");
      if (v < 0 || !f->is_element(static_cast<std::uint64_t>(v))) {
        throw Error(ErrorCode::InvalidElement, "matrix entry outside 0..q-1");
      }
      e(r, c) = static_cast<FieldElement>(v);
    }
  }
  return MatrixFq(f, std::move(e));
}

Json to_json(const RankCode& code) {
  Json gens = Json::array();
  for (const MatrixFq& g : code.generators()) gens.push_back(to_json(g)["entries"]);
  return Json{{"field", to_json(*code.field())}, {"m", code.m()}, {"n", code.n()}, {"generators", std::move(gens)}};
}

RankCode code_from_json(const Json& j) {
  const FieldPtr f = field_from_json(member(j, "field"));
  const int m = positive_int(member(j, "m"), "m");
  const int n = positive_int(member(j, "n"), "n");
  const Json& gj = member(j, "generators");
  if (!gj.is_array()) bad("generators must be an array");
  std::vector<MatrixFq> gens;
  for (const Json& g : gj) gens.push_back(matrix_from_json(g, f));
  return RankCode(f, m, n, std::move(gens));
}

Json to_json(const CodeMap& phi) {
  Json images = Json::array();
  for (const MatrixFq& img : phi.images()) images.push_back(to_json(img)["entries"]);
  return Json{{"domain", to_json(phi.domain())}, {"images", std::move(images)}};
}

CodeMap map_from_json(const Json& j) {
  RankCode domain = code_from_json(member(j, "domain"));
  const Json& ij = member(j, "images");
  if (!ij.is_array()) bad("images must be an array");
  std::vector<MatrixFq> images;
  for (const Json& img : ij) images.push_back(matrix_from_json(img, domain.field()));
  if (j.contains("codomain")) {
    const RankCode codomain = code_from_json(j["codomain"]);
    return CodeMap(std::move(domain), std::move(images), codomain);
  }
  return CodeMap(std::move(domain), std::move(images));
}

Json to_json(Position p) { return Json::array({p.row + 1, p.col + 1}); }

Position position_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("a position is a pair [row, col]");
  const std::int64_t r = integer(j[0], "row");
  const std::int64_t c = integer(j[1], "col");
  if (r < 1 || c < 1 || r > 4096 || c > 4096) bad("positions are 1-based");
  return {static_cast<int>(r - 1), static_cast<int>(c - 1)};
}

Json to_json(std::span<const Position> positions) {
  Json out = Json::array();
  for (Position p : positions) out.push_back(to_json(p));
  return out;
}

std::vector<Position> positions_from_json(const Json& j) {
  if (!j.is_array()) bad("positions must be an array of pairs");
  std::vector<Position> out;
  for (const Json& p : j) out.push_back(position_from_json(p));
  return out;
}

Json to_json(const ScalarAssignment& a) {
  return Json{{"field", to_json(*a.field())},
              {"m", a.m()},
              {"n", a.n()},
              {"positions", to_json(std::span<const Position>(a.positions()))},
              {"scalars", a.scalars()}};
}

ScalarAssignment assignment_from_json(const Json& j) {
  const FieldPtr f = field_from_json(member(j, "field"));
  const int m = positive_int(member(j, "m"), "m");
  const int n = positive_int(member(j, "n"), "n");
  std::vector<Position> positions = positions_from_json(member(j, "positions"));
  const Json& sj = member(j, "scalars");
  if (!sj.is_array()) bad("scalars must be an array");
  std::vector<FieldElement> scalars;
  for (const Json& s : sj) {
    const std::int64_t v = integer(s, "scalar");
    if (v < 0 || !f->is_element(static_cast<std::uint64_t>(v))) {
      throw Error(ErrorCode::InvalidElement, "scalar outside 0..q-1");
    }
    scalars.push_back(static_cast<FieldElement>(v));
  }
  return ScalarAssignment(f, m, n, std::move(positions), std::move(scalars));
}

Json to_json(const ExtensionWitness& w) {
  return Json{{"A", to_json(w.A())}, {"B", to_json(w.B())}, {"transposed", w.transposed()}};
}

Json to_json(const PropertyPWitness& w) { return Json{{"A", to_json(w.A)}, {"B", to_json(w.B)}}; }

Json to_json(const Support& s) {
  return Json{{"m", s.m()}, {"n", s.n()}, {"positions", to_json(std::span<const Position>(s.positions()))}};
}

Json to_json(const ReductionChain& chain) {
  Json supports = Json::array();
  for (const Support& s : chain.supports) supports.push_back(to_json(std::span<const Position>(s.positions())));
  return Json{{"length", chain.length()},
              {"supports", std::move(supports)},
              {"deleted", to_json(std::span<const Position>(chain.deleted))}};
}

Json path_report(const Path& path, const PathClassification& c) {
  Json j{{"path", to_json(std::span<const Position>(path.positions))},
         {"closed", c.closed},
         {"simple", c.simple},
         {"kind", std::string(path_kind_name(c.kind))}};
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

Json error_json(ErrorCode code, std::string_view message) {
  return Json{{"error", {{"code", std::string(error_name(code))}, {"message", std::string(message)}}}};
}

}  // namespace rankext::io
