#include "stretchkit/stretching.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "stretchkit/errors.hpp"
#include "stretchkit/json_io.hpp"

namespace stretchkit {

namespace {

void require_map_domain(const IndexSet& a, const IndexMap& map, const char* op) {
  if (!(a == map.domain())) {
    throw DomainError(std::string(op) + ": index map is defined on a different index set");
  }
}

}  // namespace

StretchedMatrix::StretchedMatrix(DenseMatrix matrix, Labels labels)
    : matrix_(std::move(matrix)), labels_(std::move(labels)) {
  if (matrix_.rows() != labels_.size() || matrix_.cols() != labels_.size()) {
    throw DimensionError("stretched matrix side must equal the number of labels");
  }
  if (std::adjacent_find(labels_.begin(), labels_.end(),
                         [](auto a, auto b) { return a >= b; }) != labels_.end()) {
    throw DimensionError("stretched matrix labels must be strictly increasing");
  }
  matrix_.set_row_labels(labels_);
  matrix_.set_col_labels(labels_);
}

const Scalar& StretchedMatrix::at_label(std::int64_t row, std::int64_t col) const {
  auto find = [&](std::int64_t v) {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) {
      throw DomainError("label " + std::to_string(v) + " is not in F(A)");
    }
    return static_cast<std::size_t>(it - labels_.begin());
  };
  return matrix_(find(row), find(col));
}

StretchedMatrix stretch(const Tensor& t, const IndexMap& map) {
  require_map_domain(t.domain(), map, "stretch");
  const ClassPartition classes = partition(map);
  DenseMatrix m(classes.size(), classes.size(), t.kind());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      const Scalar& v = t.at(i, j);
      if (!v.is_zero()) m(classes.class_of[i], classes.class_of[j]) += v;
    }
  return StretchedMatrix(std::move(m), classes.values());
}

DenseVector stretch_vector(const TensorVector& x, const IndexMap& map) {
  require_map_domain(x.domain(), map, "stretch_vector");
  const ClassPartition classes = partition(map);
  DenseVector v(classes.size(), x.kind());
  for (std::size_t i = 0; i < x.size(); ++i) v[classes.class_of[i]] += x.at(i);
  v.set_labels(classes.values());
  return v;
}

Scalar kappa(const Tensor& t, const IndexMap& map) { return det(stretch(t, map).matrix()); }

StretchedMatrix permute_stretch(const Tensor& t, const IndexMap& map, const Permutation& sigma) {
  require_map_domain(t.domain(), map, "permute_stretch");
  return stretch(t, compose_with_permutation(map, sigma));
}

DenseMatrix SimilarityWitness::conjugate(const DenseMatrix& tp_stretch) const {
  if (tp_stretch.rows() != sigma.size() || tp_stretch.cols() != sigma.size()) {
    throw DimensionError("witness size does not match the matrix");
  }
  DenseMatrix out(sigma.size(), sigma.size(), tp_stretch.kind());
  for (std::size_t p = 0; p < sigma.size(); ++p)
    for (std::size_t q = 0; q < sigma.size(); ++q) out(sigma[p], sigma[q]) = tp_stretch(p, q);
  return out;
}

SimilarityWitness tp_similarity_witness(const IndexMap& map) {
  const IndexSet& domain = map.domain();
  if (!domain.is_rectangular()) {
    throw DomainError("tp_similarity_witness requires a rectangular index set");
  }
  if (!map.is_injective()) throw DomainError("tp_similarity_witness requires an injective map");
  SimilarityWitness w;
  w.labels = map.values();
  std::sort(w.labels.begin(), w.labels.end());
  // Canonical position p of a rectangular set is exactly F_TP of its point.
  w.sigma.resize(domain.size());
  for (std::size_t p = 0; p < domain.size(); ++p) {
    const auto it = std::lower_bound(w.labels.begin(), w.labels.end(), map.value_at(p));
    w.sigma[p] = static_cast<std::size_t>(it - w.labels.begin());
  }
  w.matrix = DenseMatrix(domain.size(), domain.size(), ScalarKind::GaussianRational);
  for (std::size_t p = 0; p < domain.size(); ++p) {
    w.matrix(w.sigma[p], p) = Scalar::one(ScalarKind::GaussianRational);
  }
  return w;
}

CheckReport verify_similarity_witness(const SimilarityWitness& witness, const IndexMap& map) {
  CheckReport report{"tp-witness"};
  const IndexSet& domain = map.domain();
  const IndexMap tp = IndexMap::mixed_radix(domain);
  const DenseMatrix& u = witness.matrix;
  const DenseMatrix u_inv = u.transpose();
  std::size_t checked = 0, failures = 0;
  for (std::size_t p = 0; p < domain.size(); ++p)
    for (std::size_t q = 0; q < domain.size(); ++q) {
      const Tensor e = matrix_unit(domain, p, q, ScalarKind::GaussianRational);
      const DenseMatrix lhs = stretch(e, map).matrix();
      const DenseMatrix rhs = mat_mul(mat_mul(u, stretch(e, tp).matrix()), u_inv);
      ++checked;
      if (!(lhs == rhs)) {
        if (failures == 0) report.details["first_failure"] = {{"row", p}, {"col", q}};
        ++failures;
      }
    }
  report.passed = failures == 0;
  report.details["matrix_units_checked"] = checked;
  report.details["failures"] = failures;
  report.details["sigma"] = witness.sigma;
  return report;
}

DenseMatrix class_size_matrix(const IndexMap& map, ScalarKind kind) {
  const ClassPartition classes = partition(map);
  DenseMatrix d(classes.size(), classes.size(), kind);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    d(c, c) = Scalar::from_int(kind, static_cast<long>(classes.classes[c].positions.size()));
  }
  return d;
}

CheckReport verify_averaging_decomposition(const Tensor& t, const IndexMap& map) {
  require_map_domain(t.domain(), map, "verify_averaging_decomposition");
  CheckReport report{"averaging-decomposition"};
  const DenseMatrix base = stretch(t, map).matrix();

  const Tensor normalized = average(t, map, true);
  const bool clause_i = approx_equal(stretch(normalized, map).matrix(), base);

  const ClassPartition classes = partition(map);
  const std::size_t k = classes.size();
  constexpr auto kExact = ScalarKind::GaussianRational;
  DenseMatrix images(k * k, k * k, kExact);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Tensor indicator(t.domain(), kExact);
      for (std::size_t i : classes.classes[a].positions)
        for (std::size_t j : classes.classes[b].positions) indicator.at(i, j) = Scalar::one(kExact);
      const DenseMatrix img = stretch(indicator, map).matrix();
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) images(r * k + c, a * k + b) = img(r, c);
    }
  const std::size_t indicator_rank = rank(images);
  const bool clause_ii = indicator_rank == k * k;

  const Tensor raw = average(t, map, false);
  const DenseMatrix d = class_size_matrix(map, t.kind());
  const bool clause_iii =
      approx_equal(stretch(raw, map).matrix(), mat_mul(mat_mul(d, base), d));

  report.passed = clause_i && clause_ii && clause_iii;
  report.details = {{"normalized_preserves_stretch", clause_i},
                    {"injective_on_class_indicators", clause_ii},
                    {"indicator_rank", indicator_rank},
                    {"class_count", k},
                    {"raw_equals_d_stretch_d", clause_iii}};
  return report;
}

CheckReport kernel_preservation_check(const IndexMap& map, const Permutation& sigma,
                                      std::size_t trials, std::uint64_t seed) {
  const IndexMap permuted = compose_with_permutation(map, sigma);
  CheckReport report{"kernel-preservation"};
  const IndexSet& domain = map.domain();
  const ClassPartition classes = partition(map);
  constexpr auto kExact = ScalarKind::GaussianRational;

  // Pairs (m, m') with m ~ m', m != m'; generators of ker rho_F are
  // E_{m,j} - E_{m',j} and E_{i,m} - E_{i,m'}.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& c : classes.classes)
    for (std::size_t a = 1; a < c.positions.size(); ++a) pairs.emplace_back(c.positions[0], c.positions[a]);

  bool compatible = true;
  for (const auto& [m, m2] : pairs) compatible = compatible && permuted.value_at(m) == permuted.value_at(m2);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::uniform_int_distribution<std::size_t> pos(0, domain.size() - 1);
  std::size_t violations = 0;
  for (std::size_t trial = 0; trial < trials && !pairs.empty(); ++trial) {
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    Tensor t(domain, kExact);
    const std::size_t terms = 1 + pos(rng) % 4;
    for (std::size_t s = 0; s < terms; ++s) {
      const auto [m, m2] = pairs[pick(rng)];
      const std::size_t other = pos(rng);
      const Scalar c = Scalar::from_int(kExact, coeff(rng));
      if (rng() & 1u) {
        t.at(m, other) += c;
        t.at(m2, other) -= c;
      } else {
        t.at(other, m) += c;
        t.at(other, m2) -= c;
      }
    }
    if (!stretch(t, map).matrix().is_zero()) {
      throw Error("kernel_preservation_check: sampled tensor is not in ker rho_F");
    }
    if (!stretch(t, permuted).matrix().is_zero()) {
      if (violations == 0) report.details["first_violation"] = tensor_to_json(t);
      ++violations;
    }
  }
  report.passed = violations == 0;
  report.details["trials"] = pairs.empty() ? 0 : trials;
  report.details["violations"] = violations;
  report.details["kernel_is_trivial"] = pairs.empty();
  report.details["class_compatible"] = compatible;
  return report;
}

}  // namespace stretchkit
