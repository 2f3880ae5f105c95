#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "stretchkit/scalar.hpp"

namespace stretchkit {

using Labels = std::vector<std::int64_t>;

/// Row-major dense matrix over a single scalar kind. Labels are optional
/// integer tags for rows/columns; this module carries them but never
/// interprets them.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, ScalarKind kind);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static DenseMatrix identity(std::size_t n, ScalarKind kind);
  /// Integer literal matrix, handy for fixtures and tests.
  static DenseMatrix from_ints(ScalarKind kind,
                               std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  ScalarKind kind() const { return kind_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  /// Bounds-checked access.
  const Scalar& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Scalar value);

  std::span<const Scalar> data() const { return data_; }

  const std::optional<Labels>& row_labels() const { return row_labels_; }
  const std::optional<Labels>& col_labels() const { return col_labels_; }
  void set_row_labels(Labels labels);
  void set_col_labels(Labels labels);

  DenseMatrix transpose() const;
  bool is_zero() const;

  /// Entry-wise exact equality; labels are ignored.
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  ScalarKind kind_ = ScalarKind::GaussianRational;
  std::vector<Scalar> data_;
  std::optional<Labels> row_labels_;
  std::optional<Labels> col_labels_;
};

class DenseVector {
 public:
  DenseVector() = default;
  DenseVector(std::size_t n, ScalarKind kind);
  explicit DenseVector(std::vector<Scalar> data);

  std::size_t size() const { return data_.size(); }
  ScalarKind kind() const { return kind_; }
  const Scalar& operator[](std::size_t i) const { return data_[i]; }
  Scalar& operator[](std::size_t i) { return data_[i]; }
  std::span<const Scalar> data() const { return data_; }

  const std::optional<Labels>& labels() const { return labels_; }
  void set_labels(Labels labels);

  friend bool operator==(const DenseVector& a, const DenseVector& b);

 private:
  ScalarKind kind_ = ScalarKind::GaussianRational;
  std::vector<Scalar> data_;
  std::optional<Labels> labels_;
};

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
DenseVector mat_vec(const DenseMatrix& a, const DenseVector& x);
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scale(const DenseMatrix& a, const Scalar& s);

/// Kronecker product with the first factor varying fastest:
///   kron(a,b)(i1 + p*i2, j1 + q*j2) = a(i1,j1) * b(i2,j2)
/// for a of shape p x q. This is the mixed-radix layout I = i1 + n1*i2 used
/// by the tensor product map, so kron(A,B) is the stretch of A (x) B.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// Bareiss elimination for exact input, partially pivoted LU otherwise.
Scalar det(const DenseMatrix& a);

/// Exact rank. Throws ScalarKindError for ComplexFloat input.
std::size_t rank(const DenseMatrix& a);

/// [nullity((a - lambda I)^k)] for k = 1..k_max. Exact input only.
std::vector<std::size_t> nullity_sequence(const DenseMatrix& a, const Scalar& lambda,
                                          std::size_t k_max);

/// Frobenius norm squared, same kind as the matrix (exact for gq).
Scalar frobenius_norm2(const DenseMatrix& a);

/// Relative Frobenius comparison with an absolute floor; exact kinds
/// compare exactly.
bool approx_equal(const DenseMatrix& a, const DenseMatrix& b, double rel = 1e-9,
                  double abs_floor = 1e-12);

/// Block-diagonal direct sum.
DenseMatrix direct_sum(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace stretchkit
