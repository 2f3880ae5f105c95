#include "stretchkit/tensor.hpp"

#include <string>

#include "stretchkit/errors.hpp"

namespace stretchkit {

namespace {

void require_domain(const IndexSet& a, const IndexSet& b, const char* op) {
  if (!(a == b)) throw DomainError(std::string(op) + ": operands live on different index sets");
}

void require_map_domain(const IndexSet& a, const IndexMap& map, const char* op) {
  if (!(a == map.domain())) {
    throw DomainError(std::string(op) + ": index map is defined on a different index set");
  }
}

// S(c, j) = sum over n in class c of T(n, j)
DenseMatrix class_row_sums(const DenseMatrix& t, const ClassPartition& classes) {
  DenseMatrix s(classes.size(), t.cols(), t.kind());
  for (std::size_t n = 0; n < t.rows(); ++n) {
    const std::size_t c = classes.class_of[n];
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (!t(n, j).is_zero()) s(c, j) += t(n, j);
  }
  return s;
}

}  // namespace

Tensor::Tensor(IndexSet domain, ScalarKind kind)
    : domain_(std::move(domain)), entries_(domain_.size(), domain_.size(), kind) {}

Tensor::Tensor(IndexSet domain, DenseMatrix entries)
    : domain_(std::move(domain)), entries_(std::move(entries)) {
  if (entries_.rows() != domain_.size() || entries_.cols() != domain_.size()) {
    throw DimensionError("tensor entries must be " + std::to_string(domain_.size()) + "x" +
                         std::to_string(domain_.size()));
  }
}

const Scalar& Tensor::operator()(const MultiIndex& i, const MultiIndex& j) const {
  return entries_(domain_.require_position(i), domain_.require_position(j));
}

void Tensor::set(const MultiIndex& i, const MultiIndex& j, Scalar value) {
  entries_.set(domain_.require_position(i), domain_.require_position(j), std::move(value));
}

TensorVector::TensorVector(IndexSet domain, ScalarKind kind)
    : domain_(std::move(domain)), entries_(domain_.size(), kind) {}

TensorVector::TensorVector(IndexSet domain, DenseVector entries)
    : domain_(std::move(domain)), entries_(std::move(entries)) {
  if (entries_.size() != domain_.size()) {
    throw DimensionError("vector must have " + std::to_string(domain_.size()) + " entries");
  }
}

const Scalar& TensorVector::operator()(const MultiIndex& i) const {
  return entries_[domain_.require_position(i)];
}

void TensorVector::set(const MultiIndex& i, Scalar value) {
  require_same_kind(kind(), value.kind());
  entries_[domain_.require_position(i)] = std::move(value);
}

Tensor pure_tensor(std::span<const DenseMatrix> factors) {
  if (factors.empty()) throw DimensionError("pure_tensor needs at least one factor");
  std::vector<std::size_t> dims;
  const ScalarKind kind = factors.front().kind();
  for (const auto& f : factors) {
    if (!f.is_square()) throw DimensionError("pure_tensor factors must be square");
    require_same_kind(kind, f.kind());
    dims.push_back(f.rows());
  }
  IndexSet domain = IndexSet::rectangular(std::move(dims));
  const std::size_t n = domain.size();
  DenseMatrix entries(n, n, kind);
  for (std::size_t p = 0; p < n; ++p) {
    const MultiIndex& i = domain.point(p);
    for (std::size_t q = 0; q < n; ++q) {
      const MultiIndex& j = domain.point(q);
      Scalar v = Scalar::one(kind);
      for (std::size_t s = 0; s < factors.size() && !v.is_zero(); ++s) {
        v *= factors[s](static_cast<std::size_t>(i[s]), static_cast<std::size_t>(j[s]));
      }
      entries(p, q) = std::move(v);
    }
  }
  return Tensor(std::move(domain), std::move(entries));
}

Tensor pure_tensor(std::initializer_list<DenseMatrix> factors) {
  return pure_tensor(std::span<const DenseMatrix>(factors.begin(), factors.size()));
}

Tensor convolve(const Tensor& t1, const Tensor& t2, const IndexMap& map) {
  require_domain(t1.domain(), t2.domain(), "convolve");
  require_map_domain(t1.domain(), map, "convolve");
  require_same_kind(t1.kind(), t2.kind());
  const ClassPartition classes = partition(map);
  // sum_{m~n} T1(i,m) T2(n,j) = sum_m T1(i,m) * [sum_{n ~ m} T2(n,j)]
  const DenseMatrix sums = class_row_sums(t2.entries(), classes);
  const std::size_t n = t1.size();
  DenseMatrix out(n, n, t1.kind());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < n; ++m) {
      const Scalar& a = t1.at(i, m);
      if (a.is_zero()) continue;
      const std::size_t c = classes.class_of[m];
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& b = sums(c, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return Tensor(t1.domain(), std::move(out));
}

Tensor identity_tensor(const IndexSet& domain, ScalarKind kind) {
  return Tensor(domain, DenseMatrix::identity(domain.size(), kind));
}

Tensor star(const Tensor& t) { return Tensor(t.domain(), t.entries().transpose()); }

TensorVector act(const Tensor& t, const TensorVector& x, const IndexMap& map) {
  require_domain(t.domain(), x.domain(), "act");
  require_map_domain(t.domain(), map, "act");
  require_same_kind(t.kind(), x.kind());
  const ClassPartition classes = partition(map);
  std::vector<Scalar> class_sum(classes.size(), Scalar::zero(x.kind()));
  for (std::size_t l = 0; l < x.size(); ++l) class_sum[classes.class_of[l]] += x.at(l);
  DenseVector out(t.size(), t.kind());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      const Scalar& a = t.at(i, j);
      if (!a.is_zero()) out[i] += a * class_sum[classes.class_of[j]];
    }
  return TensorVector(t.domain(), std::move(out));
}

Tensor normalized_identity(const IndexMap& map, ScalarKind kind) {
  const ClassPartition classes = partition(map);
  const IndexSet& domain = map.domain();
  DenseMatrix d(domain.size(), domain.size(), kind);
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const long size = static_cast<long>(classes.classes[classes.class_of[i]].positions.size());
    d(i, i) = Scalar::one(kind) / Scalar::from_int(kind, size);
  }
  return Tensor(domain, std::move(d));
}

Tensor average(const Tensor& t, const IndexMap& map, bool normalized) {
  require_map_domain(t.domain(), map, "average");
  const Tensor id = normalized ? normalized_identity(map, t.kind())
                               : identity_tensor(t.domain(), t.kind());
  return convolve(id, convolve(t, id, map), map);
}

Tensor add(const Tensor& a, const Tensor& b) {
  require_domain(a.domain(), b.domain(), "add");
  return Tensor(a.domain(), add(a.entries(), b.entries()));
}

Tensor subtract(const Tensor& a, const Tensor& b) {
  require_domain(a.domain(), b.domain(), "subtract");
  return Tensor(a.domain(), subtract(a.entries(), b.entries()));
}

Tensor scale(const Tensor& a, const Scalar& s) { return Tensor(a.domain(), scale(a.entries(), s)); }

Tensor matrix_unit(const IndexSet& domain, std::size_t row_pos, std::size_t col_pos,
                   ScalarKind kind) {
  Tensor t(domain, kind);
  t.at(row_pos, col_pos) = Scalar::one(kind);
  return t;
}

}  // namespace stretchkit
