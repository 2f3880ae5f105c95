#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "stretchkit/dense.hpp"
#include "stretchkit/index_domain.hpp"
#include "stretchkit/jordan.hpp"
#include "stretchkit/tensor.hpp"

// Seeded generators for property runs. All randomness flows from one
// std::mt19937_64, so a seed fixes every draw.

namespace stretchkit::random {

using Engine = std::mt19937_64;

std::int64_t uniform_int(Engine& rng, std::int64_t lo, std::int64_t hi);
double uniform_real(Engine& rng, double lo, double hi);

/// p/q with |p| <= range, 1 <= q <= 3; imaginary part nonzero only if `complex`.
Scalar gq(Engine& rng, long range = 4, bool complex = false);
/// re, im uniform in [-1, 1].
Scalar cf(Engine& rng);
Scalar scalar(Engine& rng, ScalarKind kind);

DenseMatrix matrix(Engine& rng, std::size_t rows, std::size_t cols, ScalarKind kind);
/// Unit lower times unit upper triangular with integer entries: det = 1.
DenseMatrix unimodular(Engine& rng, std::size_t n);

Tensor tensor(Engine& rng, const IndexSet& domain, ScalarKind kind);
TensorVector vector(Engine& rng, const IndexSet& domain, ScalarKind kind);

/// Arity in [1, max_arity], each dimension in [1, max_dim].
IndexSet rectangular(Engine& rng, std::size_t max_arity, std::size_t max_dim);
/// Rectangular set with at most max_points points.
IndexSet rectangular_bounded(Engine& rng, std::size_t max_arity, std::size_t max_points);

/// One of: linear with k in [-2,2]^l, mixed-radix, max, random table.
IndexMap map(Engine& rng, const IndexSet& domain);
IndexMap injective_table(Engine& rng, const IndexSet& domain);
/// A table whose value depends only on the sorted coordinates, so every
/// sigma maps F-classes into F-classes.
IndexMap symmetric_table(Engine& rng, const IndexSet& domain);

Permutation permutation(Engine& rng, std::size_t l);

/// Random Jordan sum of total dimension `dim`, eigenvalues drawn from
/// {-1, 0, 1, 2, 1/2, 1+i}.
JordanSpec jordan_spec(Engine& rng, std::size_t dim);

}  // namespace stretchkit::random
