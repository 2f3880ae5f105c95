#include "stretchkit/json_io.hpp"

#include <string>

#include "stretchkit/errors.hpp"

namespace stretchkit {

namespace {

const json& field(const json& j, const char* name, const char* context) {
  if (!j.is_object()) throw ParseError(std::string(context) + ": expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) {
    throw ParseError(std::string(context) + ": missing field \"" + name + "\"");
  }
  return *it;
}

std::size_t count_field(const json& j, const char* name, const char* context) {
  const json& v = field(j, name, context);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ParseError(std::string(context) + ": field \"" + name + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::int64_t integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
  return v.get<std::int64_t>();
}

MultiIndex multi_index_from_json(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) throw ParseError(where + ": expected a nonempty integer array");
  std::vector<std::int64_t> coords;
  for (const auto& c : v) coords.push_back(integer(c, where));
  return MultiIndex(std::move(coords));
}

Labels labels_from_json(const json& v, const char* name) {
  if (!v.is_array()) throw ParseError(std::string("field \"") + name + "\" must be an array");
  Labels out;
  for (const auto& x : v) out.push_back(integer(x, name));
  return out;
}

mpq_class rational_part(const json& v, const char* part) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return mpq_class(mpz_class(std::to_string(v.get<std::int64_t>())));
  throw ParseError(std::string("gq scalar field \"") + part + "\" must be a \"p/q\" string");
}

double float_part(const json& v, const char* part) {
  if (!v.is_number()) throw ParseError(std::string("cf64 scalar field \"") + part + "\" must be a number");
  return v.get<double>();
}

}  // namespace

ScalarKind scalar_kind_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("field \"scalar\" must be \"cf64\" or \"gq\"");
  const auto s = j.get<std::string>();
  if (s == "gq") return ScalarKind::GaussianRational;
  if (s == "cf64") return ScalarKind::ComplexFloat;
  throw ParseError("field \"scalar\" must be \"cf64\" or \"gq\", got \"" + s + "\"");
}

json scalar_to_json(const Scalar& s) {
  if (s.is_exact()) {
    const auto& q = s.as_rational();
    return {{"re", format_rational(q.re)}, {"im", format_rational(q.im)}};
  }
  const auto& z = s.as_complex();
  return {{"re", z.real()}, {"im", z.imag()}};
}

Scalar scalar_from_json(const json& j, ScalarKind kind) {
  if (!j.is_object()) throw ParseError("scalar value must be an object {\"re\", \"im\"}");
  const json& re = field(j, "re", "scalar");
  const json* im = j.contains("im") ? &j.at("im") : nullptr;
  if (kind == ScalarKind::GaussianRational) {
    return Scalar::rational(rational_part(re, "re"), im ? rational_part(*im, "im") : mpq_class(0));
  }
  return Scalar::complex(float_part(re, "re"), im ? float_part(*im, "im") : 0.0);
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("scalar value must be an object {\"re\", \"im\"}");
  const json& re = field(j, "re", "scalar");
  const bool exact = re.is_string() || (j.contains("im") && j.at("im").is_string());
  return scalar_from_json(j, exact ? ScalarKind::GaussianRational : ScalarKind::ComplexFloat);
}

json matrix_to_json(const DenseMatrix& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
    data.push_back(std::move(row));
  }
  json out = {{"rows", m.rows()},
              {"cols", m.cols()},
              {"scalar", std::string(to_string(m.kind()))},
              {"data", std::move(data)}};
  if (m.row_labels()) out["row_labels"] = *m.row_labels();
  if (m.col_labels()) out["col_labels"] = *m.col_labels();
  return out;
}

DenseMatrix matrix_from_json(const json& j) {
  const std::size_t rows = count_field(j, "rows", "matrix");
  const std::size_t cols = count_field(j, "cols", "matrix");
  const ScalarKind kind = scalar_kind_from_json(field(j, "scalar", "matrix"));
  const json& data = field(j, "data", "matrix");
  if (!data.is_array() || data.size() != rows) {
    throw ParseError("matrix: field \"data\" must have " + std::to_string(rows) + " rows");
  }
  DenseMatrix m(rows, cols, kind);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!data[i].is_array() || data[i].size() != cols) {
      throw ParseError("matrix: row " + std::to_string(i) + " of \"data\" must have " +
                       std::to_string(cols) + " entries");
    }
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(data[i][k], kind);
  }
  if (j.contains("row_labels")) m.set_row_labels(labels_from_json(j.at("row_labels"), "row_labels"));
  if (j.contains("col_labels")) m.set_col_labels(labels_from_json(j.at("col_labels"), "col_labels"));
  return m;
}

json dense_vector_to_json(const DenseVector& v) {
  json data = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) data.push_back(scalar_to_json(v[i]));
  json out = {{"size", v.size()}, {"scalar", std::string(to_string(v.kind()))}, {"data", std::move(data)}};
  if (v.labels()) out["labels"] = *v.labels();
  return out;
}

json stretched_to_json(const StretchedMatrix& m) {
  json out = matrix_to_json(m.matrix());
  out["row_labels"] = m.labels();
  out["col_labels"] = m.labels();
  return out;
}

json index_set_to_json(const IndexSet& s) {
  if (s.is_rectangular()) return {{"kind", "rectangular"}, {"dims", s.dims()}};
  json points = json::array();
  for (const auto& p : s.points()) points.push_back(p.coords());
  return {{"kind", "explicit"}, {"points", std::move(points)}};
}

IndexSet index_set_from_json(const json& j) {
  const json& kind = field(j, "kind", "index_set");
  if (!kind.is_string()) throw ParseError("index_set: field \"kind\" must be a string");
  const auto k = kind.get<std::string>();
  if (k == "rectangular") {
    const json& dims = field(j, "dims", "index_set");
    if (!dims.is_array() || dims.empty()) {
      throw ParseError("index_set: field \"dims\" must be a nonempty array");
    }
    std::vector<std::size_t> out;
    for (const auto& d : dims) {
      if (!d.is_number_integer() || d.get<std::int64_t>() <= 0) {
        throw ParseError("index_set: field \"dims\" must hold positive integers");
      }
      out.push_back(d.get<std::size_t>());
    }
    return IndexSet::rectangular(std::move(out));
  }
  if (k == "explicit") {
    const json& points = field(j, "points", "index_set");
    if (!points.is_array()) throw ParseError("index_set: field \"points\" must be an array");
    std::vector<MultiIndex> out;
    for (const auto& p : points) out.push_back(multi_index_from_json(p, "index_set.points"));
    return IndexSet::explicit_points(std::move(out));
  }
  throw ParseError("index_set: unknown kind \"" + k + "\"");
}

json index_map_to_json(const IndexMap& m) {
  switch (m.kind()) {
    case IndexMap::Kind::Linear: return {{"kind", "linear"}, {"k", m.coefficients().coords()}};
    case IndexMap::Kind::MixedRadix: return {{"kind", "mixed-radix"}};
    case IndexMap::Kind::MaxCoord: return {{"kind", "max"}};
    case IndexMap::Kind::Enumeration: return {{"kind", "enumeration"}};
    case IndexMap::Kind::Table: break;
  }
  json pairs = json::array();
  for (std::size_t pos = 0; pos < m.domain().size(); ++pos) {
    pairs.push_back({{"point", m.domain().point(pos).coords()}, {"value", m.value_at(pos)}});
  }
  return {{"kind", "table"}, {"pairs", std::move(pairs)}};
}

IndexMap index_map_from_json(const json& j, const IndexSet& domain) {
  const json& kind = field(j, "kind", "map");
  if (!kind.is_string()) throw ParseError("map: field \"kind\" must be a string");
  const auto k = kind.get<std::string>();
  if (k == "linear") return IndexMap::linear(domain, multi_index_from_json(field(j, "k", "map"), "map.k"));
  if (k == "mixed-radix") return IndexMap::mixed_radix(domain);
  if (k == "max") return IndexMap::max_coord(domain);
  if (k == "enumeration") return IndexMap::enumeration(domain);
  if (k == "table") {
    const json& pairs = field(j, "pairs", "map");
    if (!pairs.is_array()) throw ParseError("map: field \"pairs\" must be an array");
    std::vector<std::pair<MultiIndex, std::int64_t>> out;
    for (const auto& p : pairs) {
      out.emplace_back(multi_index_from_json(field(p, "point", "map.pairs"), "map.pairs.point"),
                       integer(field(p, "value", "map.pairs"), "map.pairs.value"));
    }
    return IndexMap::table(domain, out);
  }
  throw ParseError("map: unknown kind \"" + k + "\"");
}

json tensor_to_json(const Tensor& t) {
  json entries = json::array();
  const IndexSet& d = t.domain();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t k = 0; k < t.size(); ++k) {
      const Scalar& v = t.at(i, k);
      if (v.is_zero()) continue;
      entries.push_back({{"row", d.point(i).coords()},
                         {"col", d.point(k).coords()},
                         {"value", scalar_to_json(v)}});
    }
  return {{"index_set", index_set_to_json(d)},
          {"scalar", std::string(to_string(t.kind()))},
          {"entries", std::move(entries)}};
}

Tensor tensor_from_json(const json& j) {
  IndexSet domain = index_set_from_json(field(j, "index_set", "tensor"));
  const ScalarKind kind = scalar_kind_from_json(field(j, "scalar", "tensor"));
  Tensor t(domain, kind);
  const json& entries = field(j, "entries", "tensor");
  if (!entries.is_array()) throw ParseError("tensor: field \"entries\" must be an array");
  for (const auto& e : entries) {
    const MultiIndex row = multi_index_from_json(field(e, "row", "tensor.entries"), "tensor.entries.row");
    const MultiIndex col = multi_index_from_json(field(e, "col", "tensor.entries"), "tensor.entries.col");
    Scalar v = scalar_from_json(field(e, "value", "tensor.entries"), kind);
    const std::size_t r = domain.require_position(row);
    const std::size_t c = domain.require_position(col);
    t.at(r, c) += v;
  }
  return t;
}

json tensor_vector_to_json(const TensorVector& v) {
  json entries = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.at(i).is_zero()) continue;
    entries.push_back({{"point", v.domain().point(i).coords()}, {"value", scalar_to_json(v.at(i))}});
  }
  return {{"index_set", index_set_to_json(v.domain())},
          {"scalar", std::string(to_string(v.kind()))},
          {"entries", std::move(entries)}};
}

TensorVector tensor_vector_from_json(const json& j) {
  IndexSet domain = index_set_from_json(field(j, "index_set", "vector"));
  const ScalarKind kind = scalar_kind_from_json(field(j, "scalar", "vector"));
  TensorVector v(domain, kind);
  const json& entries = field(j, "entries", "vector");
  if (!entries.is_array()) throw ParseError("vector: field \"entries\" must be an array");
  for (const auto& e : entries) {
    const char* key = e.is_object() && !e.contains("point") && e.contains("points") ? "points" : "point";
    const MultiIndex p = multi_index_from_json(field(e, key, "vector.entries"), "vector.entries.point");
    v.at(domain.require_position(p)) += scalar_from_json(field(e, "value", "vector.entries"), kind);
  }
  return v;
}

json jordan_spec_to_json(const JordanSpec& s) {
  json blocks = json::array();
  for (const auto& b : s.blocks()) {
    blocks.push_back({{"size", b.size}, {"eigenvalue", scalar_to_json(b.eigenvalue)}});
  }
  return {{"blocks", std::move(blocks)}};
}

JordanSpec jordan_spec_from_json(const json& j) {
  const json& blocks = field(j, "blocks", "jordan spec");
  if (!blocks.is_array() || blocks.empty()) {
    throw ParseError("jordan spec: field \"blocks\" must be a nonempty array");
  }
  std::vector<JordanBlock> out;
  for (const auto& b : blocks) {
    const std::size_t size = count_field(b, "size", "jordan spec.blocks");
    if (size == 0) throw ParseError("jordan spec.blocks: field \"size\" must be >= 1");
    out.push_back({size, scalar_from_json(field(b, "eigenvalue", "jordan spec.blocks"))});
  }
  return JordanSpec(std::move(out));
}

json permutation_to_json(const Permutation& p) { return p.one_line(); }

}  // namespace stretchkit
