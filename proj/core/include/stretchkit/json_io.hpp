#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "stretchkit/dense.hpp"
#include "stretchkit/index_domain.hpp"
#include "stretchkit/jordan.hpp"
#include "stretchkit/scalar.hpp"
#include "stretchkit/stretching.hpp"
#include "stretchkit/tensor.hpp"

// JSON wire formats. Keys are emitted sorted (nlohmann's default object
// type), gq values as canonical "p/q" strings, so serialization is
// byte-deterministic. Every parser throws ParseError naming the offending
// field; semantic problems (e.g. a table that misses a point) surface as
// DomainError from the constructors they feed.

namespace stretchkit {

using nlohmann::json;

ScalarKind scalar_kind_from_json(const json& j);

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, ScalarKind kind);
/// Kind inferred from the value: strings -> gq, numbers -> cf64.
Scalar scalar_from_json(const json& j);

/// {"rows", "cols", "scalar", "data": [[...]], optional "row_labels"/"col_labels"}
json matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const json& j);

/// {"size", "scalar", "data": [...], optional "labels"}
json dense_vector_to_json(const DenseVector& v);

/// Matrix JSON with mandatory labels.
json stretched_to_json(const StretchedMatrix& m);

json index_set_to_json(const IndexSet& s);
IndexSet index_set_from_json(const json& j);

json index_map_to_json(const IndexMap& m);
/// The map JSON does not carry its index set; it is bound to `domain`.
IndexMap index_map_from_json(const json& j, const IndexSet& domain);

/// {"index_set", "scalar", "entries": [{"row", "col", "value"}]}; zeros omitted.
json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const json& j);

/// {"index_set", "scalar", "entries": [{"point", "value"}]}; zeros omitted.
json tensor_vector_to_json(const TensorVector& v);
TensorVector tensor_vector_from_json(const json& j);

/// {"blocks": [{"size", "eigenvalue"}]}
json jordan_spec_to_json(const JordanSpec& s);
JordanSpec jordan_spec_from_json(const json& j);

json permutation_to_json(const Permutation& p);

}  // namespace stretchkit
