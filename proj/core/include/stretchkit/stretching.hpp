#pragma once

#include <cstdint>
#include <vector>

#include "stretchkit/dense.hpp"
#include "stretchkit/index_domain.hpp"
#include "stretchkit/report.hpp"
#include "stretchkit/tensor.hpp"

namespace stretchkit {

/// rho_F^A(T): square matrix whose rows and columns are labeled by the
/// sorted distinct values of F(A). Labels may be negative.
class StretchedMatrix {
 public:
  StretchedMatrix(DenseMatrix matrix, Labels labels);

  const DenseMatrix& matrix() const { return matrix_; }
  const Labels& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  /// Entry addressed by F-values rather than positions.
  const Scalar& at_label(std::int64_t row, std::int64_t col) const;

  friend bool operator==(const StretchedMatrix& a, const StretchedMatrix& b) {
    return a.labels_ == b.labels_ && a.matrix_ == b.matrix_;
  }

 private:
  DenseMatrix matrix_;
  Labels labels_;
};

/// Entry (F(i), F(j)) accumulates T_{i,j} over all preimages.
StretchedMatrix stretch(const Tensor& t, const IndexMap& map);

/// Component F(i) accumulates x_i over the class of i.
DenseVector stretch_vector(const TensorVector& x, const IndexMap& map);

/// det rho_F^A(T).
Scalar kappa(const Tensor& t, const IndexMap& map);

/// R_sigma(rho_F(T)) = rho_{F o sigma}(T). Throws PermutationDomainError.
StretchedMatrix permute_stretch(const Tensor& t, const IndexMap& map, const Permutation& sigma);

/// Permutation relating an injective F on a rectangular set to the tensor
/// product map: with F's values relabeled to {0,...,N-1} by rank,
/// rank(F(i)) = sigma(F_TP(i)), and rho_F = U rho_TP U^{-1}.
struct SimilarityWitness {
  std::vector<std::size_t> sigma;  // 0-based, sigma[F_TP position] = rank of F value
  Labels labels;                   // sorted F(A), i.e. rank -> F value
  DenseMatrix matrix;              // U with U(sigma[p], p) = 1

  /// Conjugates a tensor-product stretch into F's (rank-relabeled) stretch.
  DenseMatrix conjugate(const DenseMatrix& tp_stretch) const;
};

/// Throws DomainError for non-rectangular sets or non-injective maps.
SimilarityWitness tp_similarity_witness(const IndexMap& map);

/// Checks U rho_TP(E) U^{-1} = rho_F(E) on all |A|^2 matrix-unit tensors.
CheckReport verify_similarity_witness(const SimilarityWitness& witness, const IndexMap& map);

/// (i) rho_F(normalized Psi(T)) = rho_F(T);
/// (ii) rho_F is injective on the span of class-pair indicator tensors;
/// (iii) rho_F(raw Psi(T)) = D rho_F(T) D with D = diag(class sizes).
CheckReport verify_averaging_decomposition(const Tensor& t, const IndexMap& map);

/// Samples tensors in ker rho_F (combinations of within-class difference
/// tensors) and checks that rho_{F o sigma} also annihilates them. The
/// details record whether sigma maps every F-class into an (F o sigma)-class,
/// which is exactly the condition for the kernel to be preserved.
CheckReport kernel_preservation_check(const IndexMap& map, const Permutation& sigma,
                                      std::size_t trials, std::uint64_t seed = 0);

/// Diagonal matrix of class sizes in ascending F-value order.
DenseMatrix class_size_matrix(const IndexMap& map, ScalarKind kind);

}  // namespace stretchkit
