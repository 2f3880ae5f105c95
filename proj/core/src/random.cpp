#include "stretchkit/random.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace stretchkit::random {

std::int64_t uniform_int(Engine& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

double uniform_real(Engine& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Scalar gq(Engine& rng, long range, bool complex) {
  auto part = [&] {
    mpq_class q(static_cast<long>(uniform_int(rng, -range, range)),
                static_cast<unsigned long>(uniform_int(rng, 1, 3)));
    q.canonicalize();
    return q;
  };
  mpq_class re = part();
  mpq_class im = complex ? part() : mpq_class(0);
  return Scalar::rational(std::move(re), std::move(im));
}

Scalar cf(Engine& rng) { return Scalar::complex(uniform_real(rng, -1, 1), uniform_real(rng, -1, 1)); }

Scalar scalar(Engine& rng, ScalarKind kind) {
  return kind == ScalarKind::GaussianRational ? gq(rng, 4, uniform_int(rng, 0, 3) == 0) : cf(rng);
}

DenseMatrix matrix(Engine& rng, std::size_t rows, std::size_t cols, ScalarKind kind) {
  DenseMatrix m(rows, cols, kind);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar(rng, kind);
  return m;
}

DenseMatrix unimodular(Engine& rng, std::size_t n) {
  constexpr auto kExact = ScalarKind::GaussianRational;
  DenseMatrix lower = DenseMatrix::identity(n, kExact);
  DenseMatrix upper = DenseMatrix::identity(n, kExact);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = Scalar::from_int(kExact, static_cast<long>(uniform_int(rng, -2, 2)));
      upper(j, i) = Scalar::from_int(kExact, static_cast<long>(uniform_int(rng, -2, 2)));
    }
  return mat_mul(lower, upper);
}

Tensor tensor(Engine& rng, const IndexSet& domain, ScalarKind kind) {
  return Tensor(domain, matrix(rng, domain.size(), domain.size(), kind));
}

TensorVector vector(Engine& rng, const IndexSet& domain, ScalarKind kind) {
  DenseVector v(domain.size(), kind);
  for (std::size_t i = 0; i < domain.size(); ++i) v[i] = scalar(rng, kind);
  return TensorVector(domain, std::move(v));
}

IndexSet rectangular(Engine& rng, std::size_t max_arity, std::size_t max_dim) {
  const auto l = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_arity)));
  std::vector<std::size_t> dims(l);
  for (auto& d : dims) d = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_dim)));
  return IndexSet::rectangular(std::move(dims));
}

IndexSet rectangular_bounded(Engine& rng, std::size_t max_arity, std::size_t max_points) {
  const auto l = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_arity)));
  std::vector<std::size_t> dims;
  std::size_t total = 1;
  for (std::size_t s = 0; s < l; ++s) {
    const std::size_t cap = max_points / total;
    const auto d = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(std::max<std::size_t>(cap, 1))));
    dims.push_back(d);
    total *= d;
  }
  return IndexSet::rectangular(std::move(dims));
}

IndexMap map(Engine& rng, const IndexSet& domain) {
  switch (uniform_int(rng, 0, 3)) {
    case 0: {
      std::vector<std::int64_t> k(domain.arity());
      for (auto& c : k) c = uniform_int(rng, -2, 2);
      return IndexMap::linear(domain, MultiIndex(std::move(k)));
    }
    case 1: return IndexMap::mixed_radix(domain);
    case 2: return IndexMap::max_coord(domain);
    default: {
      std::vector<std::pair<MultiIndex, std::int64_t>> pairs;
      const auto hi = static_cast<std::int64_t>(domain.size());
      for (const auto& p : domain.points()) pairs.emplace_back(p, uniform_int(rng, -2, hi));
      return IndexMap::table(domain, pairs);
    }
  }
}

IndexMap injective_table(Engine& rng, const IndexSet& domain) {
  const auto n = static_cast<std::int64_t>(domain.size());
  std::vector<std::int64_t> pool(static_cast<std::size_t>(4 * n + 1));
  std::iota(pool.begin(), pool.end(), -2 * n);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::pair<MultiIndex, std::int64_t>> pairs;
  for (std::size_t pos = 0; pos < domain.size(); ++pos) pairs.emplace_back(domain.point(pos), pool[pos]);
  return IndexMap::table(domain, pairs);
}

IndexMap symmetric_table(Engine& rng, const IndexSet& domain) {
  std::map<std::vector<std::int64_t>, std::int64_t> by_orbit;
  std::vector<std::pair<MultiIndex, std::int64_t>> pairs;
  const auto hi = static_cast<std::int64_t>(domain.size());
  for (const auto& p : domain.points()) {
    auto key = p.coords();
    std::sort(key.begin(), key.end());
    auto it = by_orbit.find(key);
    if (it == by_orbit.end()) it = by_orbit.emplace(key, uniform_int(rng, 0, hi / 2)).first;
    pairs.emplace_back(p, it->second);
  }
  return IndexMap::table(domain, pairs);
}

Permutation permutation(Engine& rng, std::size_t l) {
  std::vector<std::size_t> v(l);
  std::iota(v.begin(), v.end(), std::size_t{1});
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation::from_one_line(v);
}

JordanSpec jordan_spec(Engine& rng, std::size_t dim) {
  static const std::vector<Scalar> pool = {
      Scalar::rational(-1), Scalar::rational(0), Scalar::rational(1),
      Scalar::rational(2),  Scalar::rational(1, 2), Scalar::rational(mpq_class(1), mpq_class(1))};
  std::vector<JordanBlock> blocks;
  std::size_t left = dim;
  while (left > 0) {
    const auto size = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(left)));
    const auto& e = pool[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))];
    blocks.push_back({size, e});
    left -= size;
  }
  return JordanSpec(std::move(blocks));
}

}  // namespace stretchkit::random
