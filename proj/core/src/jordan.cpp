#include "stretchkit/jordan.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stretchkit/errors.hpp"
#include "stretchkit/json_io.hpp"

namespace stretchkit {

namespace {

bool canonical_block_less(const JordanBlock& a, const JordanBlock& b) {
  const auto c = canonical_compare(a.eigenvalue, b.eigenvalue);
  if (c != 0) return c < 0;
  return a.size > b.size;
}

void append_copies(std::vector<JordanBlock>& out, std::size_t copies, std::size_t size,
                   const Scalar& eigenvalue) {
  for (std::size_t k = 0; k < copies; ++k) out.push_back({size, eigenvalue});
}

ScalarKind common_kind(const JordanSpec& spec) {
  if (spec.empty()) throw DimensionError("Jordan spec has no blocks");
  const ScalarKind kind = spec.blocks().front().eigenvalue.kind();
  for (const auto& b : spec.blocks()) require_same_kind(kind, b.eigenvalue.kind());
  return kind;
}

}  // namespace

JordanSpec::JordanSpec(std::vector<JordanBlock> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    if (b.size == 0) throw DimensionError("Jordan block size must be >= 1");
  }
  std::stable_sort(blocks_.begin(), blocks_.end(), canonical_block_less);
}

std::size_t JordanSpec::dimension() const {
  return std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0},
                         [](std::size_t acc, const JordanBlock& b) { return acc + b.size; });
}

DenseMatrix jordan_cell(std::size_t n, const Scalar& a) {
  DenseMatrix j(n, n, a.kind());
  for (std::size_t i = 0; i < n; ++i) {
    j(i, i) = a;
    if (i + 1 < n) j(i, i + 1) = Scalar::one(a.kind());
  }
  return j;
}

DenseMatrix JordanSpec::to_matrix() const {
  const ScalarKind kind = common_kind(*this);
  DenseMatrix m(dimension(), dimension(), kind);
  std::size_t offset = 0;
  for (const auto& b : blocks_) {
    for (std::size_t i = 0; i < b.size; ++i) {
      m(offset + i, offset + i) = b.eigenvalue;
      if (i + 1 < b.size) m(offset + i, offset + i + 1) = Scalar::one(kind);
    }
    offset += b.size;
  }
  return m;
}

JordanSpec jordan_pair(std::size_t p, const Scalar& a, std::size_t q, const Scalar& b) {
  if (p == 0 || q == 0) throw DimensionError("jordan_pair: block sizes must be >= 1");
  require_same_kind(a, b);
  const Scalar zero = Scalar::zero(a.kind());
  const std::size_t lo = std::min(p, q);
  const std::size_t hi = std::max(p, q);
  std::vector<JordanBlock> blocks;
  if (!a.is_zero() && !b.is_zero()) {
    const Scalar ab = a * b;
    for (std::size_t k = 1; k <= lo; ++k) blocks.push_back({p + q - 2 * k + 1, ab});
  } else if (!a.is_zero()) {
    append_copies(blocks, p, q, zero);
  } else if (!b.is_zero()) {
    append_copies(blocks, q, p, zero);
  } else {
    for (std::size_t k = 1; k + 1 <= lo; ++k) append_copies(blocks, 2, k, zero);
    append_copies(blocks, hi - lo + 1, lo, zero);
  }
  return JordanSpec(std::move(blocks));
}

JordanSpec jordan_nfold(std::span<const JordanSpec> specs) {
  if (specs.empty()) throw DimensionError("jordan_nfold needs at least one spec");
  JordanSpec acc = specs.front();
  for (std::size_t f = 1; f < specs.size(); ++f) {
    std::vector<JordanBlock> next;
    for (const auto& left : acc.blocks())
      for (const auto& right : specs[f].blocks()) {
        const JordanSpec pair = jordan_pair(left.size, left.eigenvalue, right.size, right.eigenvalue);
        next.insert(next.end(), pair.blocks().begin(), pair.blocks().end());
      }
    acc = JordanSpec(std::move(next));
  }
  return acc;
}

DenseMatrix explicit_pair_matrix(const JordanSpec& c, const JordanSpec& d) {
  const ScalarKind kind = common_kind(c);
  require_same_kind(kind, common_kind(d));
  const std::size_t mu = c.dimension();
  const std::size_t nu = d.dimension();
  DenseMatrix out(mu * nu, mu * nu, kind);
  const Scalar one = Scalar::one(kind);
  auto idx = [mu](std::size_t i, std::size_t j) { return i + mu * j; };

  // Partial sums: block l of C covers rows [mu_bar[l], mu_bar[l+1]).
  std::vector<std::size_t> mu_bar{0}, nu_bar{0};
  for (const auto& b : c.blocks()) mu_bar.push_back(mu_bar.back() + b.size);
  for (const auto& b : d.blocks()) nu_bar.push_back(nu_bar.back() + b.size);

  for (std::size_t l = 0; l < c.blocks().size(); ++l) {
    const Scalar& a = c.blocks()[l].eigenvalue;
    for (std::size_t s = 0; s < d.blocks().size(); ++s) {
      const Scalar& b = d.blocks()[s].eigenvalue;
      for (std::size_t i = mu_bar[l]; i < mu_bar[l + 1]; ++i)
        for (std::size_t j = nu_bar[s]; j < nu_bar[s + 1]; ++j)
          out(idx(i, j), idx(i, j)) += a * b;
      for (std::size_t i = mu_bar[l]; i + 2 <= mu_bar[l + 1]; ++i)
        for (std::size_t j = nu_bar[s]; j < nu_bar[s + 1]; ++j)
          out(idx(i, j), idx(i, j) + 1) += b;
      for (std::size_t i = mu_bar[l]; i < mu_bar[l + 1]; ++i)
        for (std::size_t j = nu_bar[s]; j + 2 <= nu_bar[s + 1]; ++j)
          out(idx(i, j), idx(i, j) + mu) += a;
      for (std::size_t i = mu_bar[l]; i + 2 <= mu_bar[l + 1]; ++i)
        for (std::size_t j = nu_bar[s]; j + 2 <= nu_bar[s + 1]; ++j)
          out(idx(i, j), idx(i, j) + mu + 1) += one;
    }
  }
  return out;
}

JordanSpec JordanOracleResult::to_spec() const {
  std::vector<JordanBlock> blocks;
  for (const auto& e : eigenvalues)
    for (std::size_t size : e.block_sizes) blocks.push_back({size, e.eigenvalue});
  return JordanSpec(std::move(blocks));
}

JordanOracleResult jordan_oracle(const DenseMatrix& m, std::span<const Scalar> eigenvalues) {
  if (m.kind() != ScalarKind::GaussianRational) {
    throw ScalarKindError("jordan_oracle requires an exact (gq) matrix");
  }
  if (!m.is_square()) throw DimensionError("jordan_oracle requires a square matrix");
  std::vector<Scalar> distinct(eigenvalues.begin(), eigenvalues.end());
  for (const auto& e : distinct) {
    if (!e.is_exact()) throw ScalarKindError("jordan_oracle refuses cf64 eigenvalues");
  }
  std::sort(distinct.begin(), distinct.end(),
            [](const Scalar& a, const Scalar& b) { return canonical_compare(a, b) < 0; });
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  const std::size_t n = m.rows();
  JordanOracleResult result;
  std::size_t covered = 0;
  for (const auto& lambda : distinct) {
    EigenvalueStructure e{lambda, {}, {}};
    if (n > 0) {
      auto seq = nullity_sequence(m, lambda, n);
      // Keep the sequence up to and including the first stable value.
      std::size_t len = 1;
      while (len < seq.size() && seq[len] != seq[len - 1]) ++len;
      seq.resize(len);
      e.weyr = std::move(seq);
    }
    // at_least[k-1] = number of blocks of size >= k
    std::vector<std::size_t> at_least;
    std::size_t prev = 0;
    for (std::size_t w : e.weyr) {
      if (w == prev) break;
      at_least.push_back(w - prev);
      prev = w;
    }
    for (std::size_t k = at_least.size(); k >= 1; --k) {
      const std::size_t exact = at_least[k - 1] - (k < at_least.size() ? at_least[k] : 0);
      for (std::size_t c = 0; c < exact; ++c) e.block_sizes.push_back(k);
    }
    covered += prev;
    if (!e.block_sizes.empty()) result.eigenvalues.push_back(std::move(e));
  }
  if (covered != n) {
    throw DimensionError("jordan_oracle: supplied eigenvalues account for " +
                         std::to_string(covered) + " of " + std::to_string(n) +
                         " dimensions; an eigenvalue is missing");
  }
  return result;
}

DenseMatrix nfold_kron_matrix(std::span<const JordanSpec> specs) {
  if (specs.empty()) throw DimensionError("need at least one spec");
  DenseMatrix m = specs.front().to_matrix();
  for (std::size_t f = 1; f < specs.size(); ++f) m = kron(m, specs[f].to_matrix());
  return m;
}

std::vector<Scalar> nfold_eigenvalues(std::span<const JordanSpec> specs) {
  if (specs.empty()) throw DimensionError("need at least one spec");
  auto distinct_of = [](const JordanSpec& s) {
    std::vector<Scalar> out;
    for (const auto& b : s.blocks())
      if (std::find(out.begin(), out.end(), b.eigenvalue) == out.end()) out.push_back(b.eigenvalue);
    return out;
  };
  std::vector<Scalar> acc = distinct_of(specs.front());
  for (std::size_t f = 1; f < specs.size(); ++f) {
    std::vector<Scalar> next;
    for (const auto& a : acc)
      for (const auto& b : distinct_of(specs[f])) {
        Scalar p = a * b;
        if (std::find(next.begin(), next.end(), p) == next.end()) next.push_back(std::move(p));
      }
    acc = std::move(next);
  }
  return acc;
}

CheckReport verify_jordan_nfold(std::span<const JordanSpec> specs) {
  CheckReport report{"jordan"};
  const JordanSpec closed = jordan_nfold(specs);
  const auto eigenvalues = nfold_eigenvalues(specs);
  const JordanSpec oracle = jordan_oracle(nfold_kron_matrix(specs), eigenvalues).to_spec();
  report.passed = closed == oracle;
  report.details = {{"closed_form", jordan_spec_to_json(closed)},
                    {"oracle", jordan_spec_to_json(oracle)},
                    {"agree", report.passed}};
  return report;
}

}  // namespace stretchkit
