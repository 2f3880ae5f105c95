#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stretchkit/dense.hpp"
#include "stretchkit/report.hpp"
#include "stretchkit/scalar.hpp"

namespace stretchkit {

struct JordanBlock {
  std::size_t size;
  Scalar eigenvalue;

  friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

/// A direct sum of Jordan cells J_size(eigenvalue), kept in canonical order:
/// eigenvalue ascending (re, then im), then size descending. Multiset
/// equality is therefore plain sequence equality.
class JordanSpec {
 public:
  JordanSpec() = default;
  explicit JordanSpec(std::vector<JordanBlock> blocks);

  const std::vector<JordanBlock>& blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }
  std::size_t dimension() const;

  /// The block-diagonal matrix with ones on the superdiagonal of each cell.
  /// Requires every eigenvalue to share one scalar kind.
  DenseMatrix to_matrix() const;

  friend bool operator==(const JordanSpec&, const JordanSpec&) = default;

 private:
  std::vector<JordanBlock> blocks_;
};

/// J_n(a) as a matrix.
DenseMatrix jordan_cell(std::size_t n, const Scalar& a);

/// Jordan type of rho_{p,q}(J_p(a) (x) J_q(b)).
///   ab != 0        : J_{p+q-2k+1}(ab), k = 1..min(p,q)
///   a != 0, b = 0  : p copies of J_q(0)
///   a = 0, b != 0  : q copies of J_p(0)
///   a = b = 0      : J_k(0)+J_k(0) for k = 1..min-1, plus |p-q|+1 copies of J_min(0)
/// The nilpotent cases carry eigenvalue 0: the spectrum of a Kronecker
/// product is the set of pairwise eigenvalue products.
JordanSpec jordan_pair(std::size_t p, const Scalar& a, std::size_t q, const Scalar& b);

/// Jordan type of rho(C1 (x) ... (x) Cn), folding left to right and
/// distributing each product over the direct-sum blocks of both sides.
JordanSpec jordan_nfold(std::span<const JordanSpec> specs);

/// rho(C (x) D) for Jordan sums C and D, assembled entry by entry from the
/// four-term closed form (diagonal ab, +1 step b, +mu step a, +mu+1 step 1)
/// where mu is the total size of C.
DenseMatrix explicit_pair_matrix(const JordanSpec& c, const JordanSpec& d);

struct EigenvalueStructure {
  Scalar eigenvalue;
  std::vector<std::size_t> weyr;         // nullity((M - lambda I)^k), k = 1.. until stable
  std::vector<std::size_t> block_sizes;  // descending
};

struct JordanOracleResult {
  std::vector<EigenvalueStructure> eigenvalues;  // ascending canonical order
  JordanSpec to_spec() const;
};

/// Jordan structure from exact rank sequences. The eigenvalue set must be
/// exhaustive; ScalarKindError for cf64 input, DimensionError when the
/// supplied eigenvalues do not account for the whole dimension.
JordanOracleResult jordan_oracle(const DenseMatrix& m, std::span<const Scalar> eigenvalues);

/// kron of the factors' Jordan matrices, in factor order.
DenseMatrix nfold_kron_matrix(std::span<const JordanSpec> specs);

/// Every product of one eigenvalue per factor, deduplicated.
std::vector<Scalar> nfold_eigenvalues(std::span<const JordanSpec> specs);

/// Closed form vs oracle on the n-fold Kronecker matrix. Details carry
/// "closed_form", "oracle" and "agree".
CheckReport verify_jordan_nfold(std::span<const JordanSpec> specs);

}  // namespace stretchkit
