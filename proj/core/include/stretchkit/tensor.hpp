#pragma once

#include <span>
#include <vector>

#include "stretchkit/dense.hpp"
#include "stretchkit/index_domain.hpp"
#include "stretchkit/scalar.hpp"

namespace stretchkit {

/// An element T of Mat(A): entries T_{i,j} for i, j in A, stored as a dense
/// |A| x |A| array whose rows and columns follow A's canonical order.
class Tensor {
 public:
  Tensor(IndexSet domain, ScalarKind kind);
  /// entries must be |A| x |A|.
  Tensor(IndexSet domain, DenseMatrix entries);

  const IndexSet& domain() const { return domain_; }
  ScalarKind kind() const { return entries_.kind(); }
  std::size_t size() const { return domain_.size(); }

  /// The |A| x |A| array in canonical order.
  const DenseMatrix& entries() const { return entries_; }

  const Scalar& at(std::size_t row_pos, std::size_t col_pos) const { return entries_(row_pos, col_pos); }
  Scalar& at(std::size_t row_pos, std::size_t col_pos) { return entries_(row_pos, col_pos); }
  const Scalar& operator()(const MultiIndex& i, const MultiIndex& j) const;
  void set(const MultiIndex& i, const MultiIndex& j, Scalar value);

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.domain_ == b.domain_ && a.entries_ == b.entries_;
  }

 private:
  IndexSet domain_;
  DenseMatrix entries_;
};

/// An element x of C^A, in canonical order.
class TensorVector {
 public:
  TensorVector(IndexSet domain, ScalarKind kind);
  TensorVector(IndexSet domain, DenseVector entries);

  const IndexSet& domain() const { return domain_; }
  ScalarKind kind() const { return entries_.kind(); }
  std::size_t size() const { return domain_.size(); }
  const DenseVector& entries() const { return entries_; }

  const Scalar& at(std::size_t pos) const { return entries_[pos]; }
  Scalar& at(std::size_t pos) { return entries_[pos]; }
  const Scalar& operator()(const MultiIndex& i) const;
  void set(const MultiIndex& i, Scalar value);

  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.domain_ == b.domain_ && a.entries_ == b.entries_;
  }

 private:
  IndexSet domain_;
  DenseVector entries_;
};

/// A1 (x) ... (x) Al as an element of Mat(A) for the rectangular set with
/// dims (n1, ..., nl): T_{i,j} = A1(i1,j1) A2(i2,j2) ... Al(il,jl).
Tensor pure_tensor(std::span<const DenseMatrix> factors);
Tensor pure_tensor(std::initializer_list<DenseMatrix> factors);

/// (T1 * T2)_{i,j} = sum over m ~ n of T1_{i,m} T2_{n,j}.
Tensor convolve(const Tensor& t1, const Tensor& t2, const IndexMap& map);

/// Id_{i,j} = prod_m delta(i_m, j_m).
Tensor identity_tensor(const IndexSet& domain, ScalarKind kind);

/// (star T)_{i,j} = T_{j,i}.
Tensor star(const Tensor& t);

/// (T * x)_i = sum over j ~ l of T_{i,j} x_l.
TensorVector act(const Tensor& t, const TensorVector& x, const IndexMap& map);

/// Raw mode: Psi(T) = Id * (T * Id), computed literally with the convolution.
/// Normalized mode: Id is replaced by the diagonal tensor with entries
/// 1/|class(i)|, which makes the result the mean of T over class(i) x class(j).
Tensor average(const Tensor& t, const IndexMap& map, bool normalized);

/// Diagonal tensor with (i,i) entry 1/|class(i)|.
Tensor normalized_identity(const IndexMap& map, ScalarKind kind);

Tensor add(const Tensor& a, const Tensor& b);
Tensor subtract(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, const Scalar& s);

/// The matrix-unit tensor with a single 1 at (row_pos, col_pos).
Tensor matrix_unit(const IndexSet& domain, std::size_t row_pos, std::size_t col_pos, ScalarKind kind);

}  // namespace stretchkit
