#include "stretchkit/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "stretchkit/errors.hpp"

namespace stretchkit {

namespace {

std::string shape(const DenseMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_exact(const DenseMatrix& a, const char* op) {
  if (a.kind() != ScalarKind::GaussianRational) {
    throw ScalarKindError(std::string(op) + " requires an exact (gq) matrix");
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, ScalarKind kind)
    : rows_(rows), cols_(cols), kind_(kind), data_(rows * cols, Scalar::zero(kind)) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw DimensionError("matrix data has " + std::to_string(data_.size()) +
                         " entries, expected " + std::to_string(rows * cols));
  }
  if (data_.empty()) return;
  kind_ = data_.front().kind();
  for (const auto& s : data_) require_same_kind(kind_, s.kind());
}

DenseMatrix DenseMatrix::identity(std::size_t n, ScalarKind kind) {
  DenseMatrix m(n, n, kind);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(kind);
  return m;
}

DenseMatrix DenseMatrix::from_ints(ScalarKind kind,
                                   std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  DenseMatrix m(r, c, kind);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = Scalar::from_int(kind, v);
    ++i;
  }
  return m;
}

const Scalar& DenseMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw DimensionError("index (" + std::to_string(r) + "," + std::to_string(c) +
                         ") out of range for " + shape(*this));
  }
  return (*this)(r, c);
}

void DenseMatrix::set(std::size_t r, std::size_t c, Scalar value) {
  require_same_kind(kind_, value.kind());
  (void)at(r, c);
  (*this)(r, c) = std::move(value);
}

void DenseMatrix::set_row_labels(Labels labels) {
  if (labels.size() != rows_) throw DimensionError("row label count does not match rows");
  row_labels_ = std::move(labels);
}

void DenseMatrix::set_col_labels(Labels labels) {
  if (labels.size() != cols_) throw DimensionError("column label count does not match cols");
  col_labels_ = std::move(labels);
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_, kind_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  if (col_labels_) t.row_labels_ = col_labels_;
  if (row_labels_) t.col_labels_ = row_labels_;
  return t;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.kind_ == b.kind_ && a.data_ == b.data_;
}

DenseVector::DenseVector(std::size_t n, ScalarKind kind)
    : kind_(kind), data_(n, Scalar::zero(kind)) {}

DenseVector::DenseVector(std::vector<Scalar> data) : data_(std::move(data)) {
  if (data_.empty()) return;
  kind_ = data_.front().kind();
  for (const auto& s : data_) require_same_kind(kind_, s.kind());
}

void DenseVector::set_labels(Labels labels) {
  if (labels.size() != data_.size()) throw DimensionError("label count does not match length");
  labels_ = std::move(labels);
}

bool operator==(const DenseVector& a, const DenseVector& b) {
  return a.kind_ == b.kind_ && a.data_ == b.data_;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mat_mul: cannot multiply " + shape(a) + " by " + shape(b));
  }
  require_same_kind(a.kind(), b.kind());
  DenseMatrix c(a.rows(), b.cols(), a.kind());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

DenseVector mat_vec(const DenseMatrix& a, const DenseVector& x) {
  if (a.cols() != x.size()) {
    throw DimensionError("mat_vec: " + shape(a) + " times vector of length " +
                         std::to_string(x.size()));
  }
  require_same_kind(a.kind(), x.kind());
  DenseVector y(a.rows(), a.kind());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero()) y[i] += a(i, k) * x[k];
  return y;
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("add: shape mismatch " + shape(a) + " vs " + shape(b));
  }
  require_same_kind(a.kind(), b.kind());
  DenseMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("subtract: shape mismatch " + shape(a) + " vs " + shape(b));
  }
  require_same_kind(a.kind(), b.kind());
  DenseMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

DenseMatrix scale(const DenseMatrix& a, const Scalar& s) {
  require_same_kind(a.kind(), s.kind());
  DenseMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_kind(a.kind(), b.kind());
  const std::size_t p = a.rows(), q = a.cols();
  DenseMatrix c(p * b.rows(), q * b.cols(), a.kind());
  for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
    for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
      const Scalar& bv = b(i2, j2);
      if (bv.is_zero()) continue;
      for (std::size_t i1 = 0; i1 < p; ++i1)
        for (std::size_t j1 = 0; j1 < q; ++j1) c(i1 + p * i2, j1 + q * j2) = a(i1, j1) * bv;
    }
  return c;
}

namespace {

Scalar det_bareiss(DenseMatrix m) {
  const std::size_t n = m.rows();
  const ScalarKind kind = m.kind();
  Scalar prev = Scalar::one(kind);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k).is_zero()) ++swap;
      if (swap == n) return Scalar::zero(kind);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = Scalar::zero(kind);
    }
    prev = m(k, k);
  }
  Scalar d = m(n - 1, n - 1);
  return negate ? -d : d;
}

Scalar det_lu(DenseMatrix m) {
  const std::size_t n = m.rows();
  std::complex<double> d(1.0, 0.0);
  std::vector<std::complex<double>> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).as_complex();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i * n + k]) > std::abs(a[piv * n + k])) piv = i;
    if (a[piv * n + k] == std::complex<double>{}) return Scalar::complex(0.0);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      d = -d;
    }
    d *= a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const auto f = a[i * n + k] / a[k * n + k];
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return Scalar(d);
}

}  // namespace

Scalar det(const DenseMatrix& a) {
  if (!a.is_square()) throw DimensionError("det: matrix is " + shape(a) + ", not square");
  if (a.rows() == 0) return Scalar::one(a.kind());
  if (a.kind() == ScalarKind::GaussianRational) return det_bareiss(a);
  return det_lu(a);
}

std::size_t rank(const DenseMatrix& a) {
  require_exact(a, "rank");
  DenseMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(piv, j));
    const Scalar inv = Scalar::one(m.kind()) / m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<std::size_t> nullity_sequence(const DenseMatrix& a, const Scalar& lambda,
                                          std::size_t k_max) {
  require_exact(a, "nullity_sequence");
  if (!a.is_square()) throw DimensionError("nullity_sequence: matrix is " + shape(a));
  if (k_max < 1) throw std::invalid_argument("nullity_sequence: k_max must be >= 1");
  require_same_kind(a.kind(), lambda.kind());
  const std::size_t n = a.rows();
  DenseMatrix shifted = a;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
  std::vector<std::size_t> out;
  out.reserve(k_max);
  DenseMatrix power = shifted;
  for (std::size_t k = 1; k <= k_max; ++k) {
    out.push_back(n - rank(power));
    // Once the kernel stops growing it never grows again.
    if (k >= 2 && out[k - 1] == out[k - 2]) {
      out.resize(k_max, out.back());
      break;
    }
    if (k < k_max) power = mat_mul(power, shifted);
  }
  return out;
}

Scalar frobenius_norm2(const DenseMatrix& a) {
  Scalar s = Scalar::zero(a.kind());
  for (const auto& v : a.data()) s += v.norm2();
  return s;
}

bool approx_equal(const DenseMatrix& a, const DenseMatrix& b, double rel, double abs_floor) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  require_same_kind(a.kind(), b.kind());
  if (a.kind() == ScalarKind::GaussianRational) return a == b;
  double diff = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto x = a(i, j).as_complex(), y = b(i, j).as_complex();
      diff += std::norm(x - y);
      na += std::norm(x);
      nb += std::norm(y);
    }
  return std::sqrt(diff) <= std::max(abs_floor, rel * std::sqrt(std::max(na, nb)));
}

DenseMatrix direct_sum(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() == 0 && a.cols() == 0) return b;
  require_same_kind(a.kind(), b.kind());
  DenseMatrix c(a.rows() + b.rows(), a.cols() + b.cols(), a.kind());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

}  // namespace stretchkit
