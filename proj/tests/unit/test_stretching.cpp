#include <gtest/gtest.h>

#include <set>

#include "displayed.hpp"
#include "oracles.hpp"
#include "stretchkit/errors.hpp"
#include "stretchkit/random.hpp"
#include "stretchkit/stretching.hpp"

using namespace stretchkit;

namespace {
constexpr auto Q = ScalarKind::GaussianRational;
const IndexSet kSquare = IndexSet::rectangular({2, 2});

DenseMatrix jordan2(const Scalar& l) {
  return DenseMatrix(2, 2, {l, Scalar::one(l.kind()), Scalar::zero(l.kind()), l});
}
}  // namespace

TEST(Stretch, SumMapOnIntegerFactors) {
  const auto a = DenseMatrix::from_ints(Q, {{1, 2}, {3, 4}});
  const auto b = DenseMatrix::from_ints(Q, {{5, 6}, {7, 8}});
  const StretchedMatrix s = stretch(pure_tensor({a, b}), IndexMap::linear(kSquare, {1, 1}));
  EXPECT_EQ(s.labels(), (Labels{0, 1, 2}));
  EXPECT_EQ(s.matrix(), DenseMatrix::from_ints(Q, {{5, 16, 12}, {22, 60, 40}, {21, 52, 32}}));
  EXPECT_EQ(s.at_label(1, 1), Scalar::rational(60));
  EXPECT_THROW(s.at_label(3, 0), DomainError);
}

TEST(Stretch, DisplayedFormulasOnRandomFactors) {
  random::Engine rng(21);
  for (int t = 0; t < 20; ++t) {
    const auto a = random::matrix(rng, 2, 2, Q), b = random::matrix(rng, 2, 2, Q);
    const Tensor ab = pure_tensor({a, b});
    EXPECT_EQ(stretch(ab, IndexMap::linear(kSquare, {1, 1})).matrix(), displayed::sum_map_2x2(a, b));
    EXPECT_EQ(stretch(ab, IndexMap::linear(kSquare, {1, -1})).matrix(), displayed::difference_map_2x2(a, b));
    EXPECT_EQ(stretch(ab, IndexMap::max_coord(kSquare)).matrix(), displayed::max_map_2x2(a, b));
    const auto b3 = random::matrix(rng, 3, 3, Q);
    const IndexSet rect = IndexSet::rectangular({2, 3});
    EXPECT_EQ(stretch(pure_tensor({a, b3}), IndexMap::linear(rect, {1, 1})).matrix(), displayed::sum_map_2x3(a, b3));
  }
}

TEST(Stretch, SymmetriesOfTheTwoByTwoExamples) {
  random::Engine rng(22);
  const auto a = random::matrix(rng, 2, 2, Q), b = random::matrix(rng, 2, 2, Q);
  const IndexMap sum = IndexMap::linear(kSquare, {1, 1});
  const IndexMap mx = IndexMap::max_coord(kSquare);
  EXPECT_EQ(stretch(pure_tensor({a, b}), sum), stretch(pure_tensor({b, a}), sum));
  EXPECT_EQ(stretch(pure_tensor({a, b}), mx), stretch(pure_tensor({b, a}), mx));
  const auto i2 = DenseMatrix::identity(2, Q);
  EXPECT_EQ(stretch(pure_tensor({a, i2}), sum).matrix(), displayed::with_identity_right(a));
  const IndexMap diff = IndexMap::linear(kSquare, {1, -1});
  EXPECT_EQ(stretch(pure_tensor({a, i2}), diff).matrix(), displayed::with_identity_right(a));
  // I (x) A under the difference map uses A reflected in both diagonals
  const auto reflected = DenseMatrix(2, 2, {a(1, 1), a(1, 0), a(0, 1), a(0, 0)});
  EXPECT_EQ(stretch(pure_tensor({i2, a}), diff).matrix(), displayed::with_identity_right(reflected));
}

TEST(Stretch, JordanInstances) {
  const Scalar l = Scalar::rational(mpq_class(2, 3), mpq_class(1));
  const Scalar u = Scalar::rational(mpq_class(-5, 2));
  const Tensor t = pure_tensor({jordan2(l), jordan2(u)});
  EXPECT_EQ(stretch(t, IndexMap::linear(kSquare, {1, 1})).matrix(), displayed::sum_map_jordan(l, u));
  EXPECT_EQ(stretch(t, IndexMap::linear(kSquare, {1, -1})).matrix(), displayed::difference_map_jordan(l, u));
}

TEST(Stretch, MixedRadixOfIdentitiesIsIdentity) {
  const IndexSet a = IndexSet::rectangular({2, 3, 2});
  const Tensor t = pure_tensor({DenseMatrix::identity(2, Q), DenseMatrix::identity(3, Q), DenseMatrix::identity(2, Q)});
  EXPECT_EQ(stretch(t, IndexMap::mixed_radix(a)).matrix(), DenseMatrix::identity(12, Q));
}

TEST(Stretch, ExplicitIndexSetWithNegativeValues) {
  const IndexSet a = IndexSet::explicit_points({{0, 0}, {1, 2}, {-1, 1}});
  const IndexMap f = IndexMap::linear(a, {1, -1});
  random::Engine rng(23);
  const Tensor t = random::tensor(rng, a, Q);
  const StretchedMatrix s = stretch(t, f);
  const auto brute = oracle::brute_stretch(t, f);
  EXPECT_EQ(s.labels(), brute.labels);
  EXPECT_EQ(s.labels(), (Labels{-2, -1, 0}));
  EXPECT_EQ(s.matrix(), brute.matrix);
}

TEST(StretchVector, SumsOverClasses) {
  const IndexMap f = IndexMap::linear(kSquare, {1, 1});
  TensorVector x(kSquare, Q);
  x.set({0, 1}, Scalar::rational(1));
  x.set({1, 0}, Scalar::rational(1));
  const DenseVector v = stretch_vector(x, f);
  EXPECT_EQ(v, DenseVector({Scalar::rational(0), Scalar::rational(2), Scalar::rational(0)}));
  EXPECT_EQ(v.labels(), (Labels{0, 1, 2}));
  x.set({1, 0}, Scalar::rational(-1));
  EXPECT_EQ(stretch_vector(x, f), DenseVector(3, Q));
}

TEST(Kappa, KnownValues) {
  const auto a = DenseMatrix::from_ints(Q, {{1, 2}, {3, 4}});
  const auto b = DenseMatrix::from_ints(Q, {{5, 6}, {7, 8}});
  EXPECT_EQ(kappa(pure_tensor({a, b}), IndexMap::mixed_radix(kSquare)), Scalar::rational(16));
  EXPECT_EQ(kappa(identity_tensor(kSquare, Q), IndexMap::enumeration(kSquare)), Scalar::rational(1));
}

TEST(Kappa, MultiplicativeUnderSumMap) {
  random::Engine rng(24);
  const IndexMap f = IndexMap::linear(kSquare, {1, 1});
  for (int t = 0; t < 20; ++t) {
    const Tensor t1 = random::tensor(rng, kSquare, Q), t2 = random::tensor(rng, kSquare, Q);
    EXPECT_EQ(kappa(convolve(t1, t2, f), f), kappa(t1, f) * kappa(t2, f));
  }
}

TEST(PermuteStretch, SwapGivesReversedKronecker) {
  random::Engine rng(25);
  const auto b1 = random::matrix(rng, 2, 2, Q), b2 = random::matrix(rng, 2, 2, Q);
  const IndexMap tp = IndexMap::mixed_radix(kSquare);
  const Tensor t = pure_tensor({b1, b2});
  EXPECT_EQ(permute_stretch(t, tp, Permutation::identity(2)), stretch(t, tp));
  EXPECT_EQ(permute_stretch(t, tp, Permutation::parse("2,1")).matrix(), kron(b2, b1));
}

TEST(PermuteStretch, ReversalOnThreeFactors) {
  random::Engine rng(26);
  const auto b1 = random::matrix(rng, 2, 2, Q), b2 = random::matrix(rng, 2, 2, Q), b3 = random::matrix(rng, 2, 2, Q);
  const IndexSet cube = IndexSet::rectangular({2, 2, 2});
  const Tensor t = pure_tensor({b1, b2, b3});
  EXPECT_EQ(permute_stretch(t, IndexMap::mixed_radix(cube), Permutation::reversal(3)).matrix(),
            stretch(pure_tensor({b3, b2, b1}), IndexMap::mixed_radix(cube)).matrix());
  EXPECT_THROW(permute_stretch(pure_tensor({b1, random::matrix(rng, 3, 3, Q)}),
                               IndexMap::mixed_radix(IndexSet::rectangular({2, 3})), Permutation::parse("2,1")),
               PermutationDomainError);
}

TEST(Witness, MixedRadixGivesIdentity) {
  const SimilarityWitness w = tp_similarity_witness(IndexMap::mixed_radix(IndexSet::rectangular({2, 3})));
  EXPECT_EQ(w.sigma, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(w.matrix, DenseMatrix::identity(6, Q));
}

TEST(Witness, ThreePointTable) {
  const IndexSet a = IndexSet::rectangular({3});
  const IndexMap f = IndexMap::table(a, {{{0}, 2}, {{1}, 0}, {{2}, 1}});
  const SimilarityWitness w = tp_similarity_witness(f);
  EXPECT_EQ(w.sigma, (std::vector<std::size_t>{2, 0, 1}));
  EXPECT_EQ(w.labels, (Labels{0, 1, 2}));
  const CheckReport r = verify_similarity_witness(w, f);
  EXPECT_TRUE(r.passed) << r.to_json().dump();
}

TEST(Witness, LinearMapsOnTheSquare) {
  EXPECT_EQ(tp_similarity_witness(IndexMap::linear(kSquare, {1, 2})).sigma, (std::vector<std::size_t>{0, 1, 2, 3}));
  const IndexMap f = IndexMap::linear(kSquare, {2, 1});
  const SimilarityWitness w = tp_similarity_witness(f);
  EXPECT_EQ(w.sigma, (std::vector<std::size_t>{0, 2, 1, 3}));
  EXPECT_EQ(w.labels, (Labels{0, 1, 2, 3}));
  EXPECT_TRUE(verify_similarity_witness(w, f).passed);
}

TEST(Witness, ConjugationAgainstBruteStretch) {
  random::Engine rng(27);
  for (int t = 0; t < 15; ++t) {
    const IndexSet a = random::rectangular_bounded(rng, 3, 12);
    const IndexMap f = random::injective_table(rng, a);
    const Tensor x = random::tensor(rng, a, Q);
    const SimilarityWitness w = tp_similarity_witness(f);
    EXPECT_EQ(w.conjugate(stretch(x, IndexMap::mixed_radix(a)).matrix()), oracle::brute_stretch(x, f).matrix);
  }
}

TEST(Witness, RejectsNonInjectiveOrNonRectangular) {
  EXPECT_THROW(tp_similarity_witness(IndexMap::max_coord(kSquare)), DomainError);
  EXPECT_THROW(tp_similarity_witness(IndexMap::enumeration(IndexSet::explicit_points({{0}, {5}}))), DomainError);
}

TEST(Averaging, DecompositionClausesOnSmallMaps) {
  random::Engine rng(28);
  for (const IndexMap& f : {IndexMap::linear(kSquare, {1, 1}), IndexMap::linear(kSquare, {1, -1}),
                            IndexMap::max_coord(kSquare), IndexMap::mixed_radix(kSquare)}) {
    const CheckReport r = verify_averaging_decomposition(random::tensor(rng, kSquare, Q), f);
    EXPECT_TRUE(r.passed) << r.to_json().dump();
    const auto classes = partition(f).size();
    EXPECT_EQ(r.details["indicator_rank"], classes * classes);
  }
  const auto a = random::matrix(rng, 2, 2, Q), b = random::matrix(rng, 2, 2, Q);
  EXPECT_TRUE(verify_averaging_decomposition(pure_tensor({a, b}), IndexMap::max_coord(kSquare)).passed);
}

TEST(Averaging, RawScalesByClassSizes) {
  random::Engine rng(29);
  const IndexMap f = IndexMap::max_coord(kSquare);
  const Tensor t = random::tensor(rng, kSquare, Q);
  const DenseMatrix d = class_size_matrix(f, Q);
  EXPECT_EQ(d, DenseMatrix::from_ints(Q, {{1, 0}, {0, 3}}));
  EXPECT_EQ(stretch(average(t, f, false), f).matrix(), mat_mul(mat_mul(d, stretch(t, f).matrix()), d));
  EXPECT_EQ(stretch(average(t, f, true), f), stretch(t, f));
}

TEST(KernelPreservation, HoldsForClassCompatibleMaps) {
  const IndexSet cube = IndexSet::rectangular({3, 3});
  for (const IndexMap& f : {IndexMap::max_coord(cube), IndexMap::linear(cube, {1, 1})}) {
    const CheckReport r = kernel_preservation_check(f, Permutation::parse("2,1"), 10, 4);
    EXPECT_TRUE(r.passed) << r.to_json().dump();
    EXPECT_TRUE(r.details["class_compatible"].get<bool>());
  }
  const CheckReport swap = kernel_preservation_check(IndexMap::linear(kSquare, {1, -1}), Permutation::parse("2,1"), 10, 4);
  EXPECT_TRUE(swap.passed);
}

TEST(KernelPreservation, FailsForIncompatibleLinearMap) {
  // F = i1 + 2 i2 on {0,1,2}^2 glues (2,0) with (0,1); the swap sends them to different classes.
  const IndexMap f = IndexMap::linear(IndexSet::rectangular({3, 3}), {1, 2});
  const CheckReport r = kernel_preservation_check(f, Permutation::parse("2,1"), 10, 4);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.details["class_compatible"].get<bool>());
  EXPECT_GT(r.details["violations"].get<int>(), 0);
}

TEST(StretchProperty, MatchesBruteForceAndIsMultiplicative) {
  random::Engine rng(30);
  for (int t = 0; t < 40; ++t) {
    const IndexSet a = random::rectangular(rng, 3, 3);
    const IndexMap f = random::map(rng, a);
    const Tensor t1 = random::tensor(rng, a, Q), t2 = random::tensor(rng, a, Q);
    const auto brute = oracle::brute_stretch(t1, f);
    const StretchedMatrix s1 = stretch(t1, f);
    EXPECT_EQ(s1.labels(), brute.labels);
    EXPECT_EQ(s1.matrix(), brute.matrix);
    EXPECT_EQ(s1.size(), partition(f).size());
    EXPECT_EQ(stretch(convolve(t1, t2, f), f).matrix(), oracle::naive_mul(s1.matrix(), stretch(t2, f).matrix()));
    EXPECT_EQ(stretch(add(t1, t2), f).matrix(), add(s1.matrix(), stretch(t2, f).matrix()));
  }
}

TEST(StretchProperty, InjectiveMapsSendMatrixUnitsToDistinctUnits) {
  random::Engine rng(36);
  for (int t = 0; t < 10; ++t) {
    const IndexSet a = random::rectangular_bounded(rng, 3, 8);
    const IndexMap f = random::injective_table(rng, a);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) {
        const DenseMatrix m = stretch(matrix_unit(a, i, j, Q), f).matrix();
        std::size_t nonzero = 0;
        std::pair<std::size_t, std::size_t> where;
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) {
              ++nonzero;
              where = {r, c};
              EXPECT_EQ(m(r, c), Scalar::rational(1));
            }
        EXPECT_EQ(nonzero, 1u);
        EXPECT_TRUE(seen.insert(where).second);
      }
  }
}

TEST(StretchProperty, ComplexFloatHomomorphismWithinTolerance) {
  random::Engine rng(37);
  for (int t = 0; t < 30; ++t) {
    const IndexSet a = random::rectangular(rng, 3, 3);
    const IndexMap f = random::map(rng, a);
    const Tensor t1 = random::tensor(rng, a, ScalarKind::ComplexFloat);
    const Tensor t2 = random::tensor(rng, a, ScalarKind::ComplexFloat);
    EXPECT_TRUE(approx_equal(stretch(convolve(t1, t2, f), f).matrix(),
                             mat_mul(stretch(t1, f).matrix(), stretch(t2, f).matrix()), 1e-9));
  }
}

TEST(KernelPreservation, TrivialKernelAndSwappedDifference) {
  const CheckReport inj = kernel_preservation_check(IndexMap::mixed_radix(kSquare), Permutation::parse("2,1"), 5, 1);
  EXPECT_TRUE(inj.passed);
  EXPECT_TRUE(inj.details["kernel_is_trivial"].get<bool>());
  const IndexMap f = IndexMap::linear(kSquare, {1, 1});
  Tensor d(kSquare, Q);
  d.set({0, 1}, {0, 0}, Scalar::rational(1));
  d.set({1, 0}, {0, 0}, Scalar::rational(-1));
  EXPECT_TRUE(stretch(d, f).matrix().is_zero());
  EXPECT_TRUE(permute_stretch(d, f, Permutation::parse("2,1")).matrix().is_zero());
  EXPECT_TRUE(permute_stretch(d, IndexMap::max_coord(kSquare), Permutation::parse("2,1")).matrix().is_zero());
}
