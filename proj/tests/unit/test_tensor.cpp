#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stretchkit/errors.hpp"
#include "stretchkit/random.hpp"
#include "stretchkit/tensor.hpp"

using namespace stretchkit;

namespace {
constexpr auto Q = ScalarKind::GaussianRational;
const IndexSet kSquare = IndexSet::rectangular({2, 2});
}  // namespace

TEST(PureTensor, IdentityFactorsGiveIdentity) {
  const auto i2 = DenseMatrix::identity(2, Q);
  EXPECT_EQ(pure_tensor({i2, i2}), identity_tensor(kSquare, Q));
}

TEST(PureTensor, EntryIsProductOfFactorEntries) {
  const auto a = DenseMatrix::from_ints(Q, {{1, 2}, {3, 4}});
  const auto b = DenseMatrix::from_ints(Q, {{5, 6}, {7, 8}});
  const Tensor t = pure_tensor({a, b});
  EXPECT_EQ(t({0, 0}, {1, 1}), Scalar::rational(2 * 6));
  EXPECT_EQ(t({1, 0}, {0, 1}), Scalar::rational(3 * 6));
  // pure tensor under the mixed-radix layout is the Kronecker product
  EXPECT_EQ(t.entries(), kron(a, b));
  EXPECT_THROW(pure_tensor({DenseMatrix(2, 3, Q)}), DimensionError);
}

TEST(PureTensor, ThreeFactorsMatchIndexKronecker) {
  random::Engine rng(4);
  const auto a = random::matrix(rng, 2, 2, Q), b = random::matrix(rng, 3, 3, Q), c = random::matrix(rng, 2, 2, Q);
  const Tensor t = pure_tensor({a, b, c});
  EXPECT_EQ(t.domain(), IndexSet::rectangular({2, 3, 2}));
  EXPECT_EQ(t.entries(), oracle::kron_by_index(oracle::kron_by_index(a, b), c));
}

TEST(Convolve, IdentityIsNeutralForInjectiveMaps) {
  random::Engine rng(6);
  const IndexSet a = IndexSet::rectangular({2, 3});
  const Tensor t = random::tensor(rng, a, Q);
  const Tensor id = identity_tensor(a, Q);
  for (const IndexMap& m : {IndexMap::mixed_radix(a), IndexMap::enumeration(a), IndexMap::linear(a, {1, 2})}) {
    EXPECT_EQ(convolve(t, id, m), t);
    EXPECT_EQ(convolve(id, t, m), t);
  }
}

TEST(Convolve, SumMapAddsTheSwappedTerms) {
  random::Engine rng(8);
  const IndexMap f = IndexMap::linear(kSquare, {1, 1});
  const Tensor t1 = random::tensor(rng, kSquare, Q), t2 = random::tensor(rng, kSquare, Q);
  const Tensor c = convolve(t1, t2, f);
  const MultiIndex a{0, 1}, b{1, 0};
  for (const auto& i : kSquare.points())
    for (const auto& j : kSquare.points()) {
      Scalar expected = Scalar::zero(Q);
      for (const auto& m : kSquare.points()) expected += t1(i, m) * t2(m, j);
      expected += t1(i, a) * t2(b, j) + t1(i, b) * t2(a, j);
      EXPECT_EQ(c(i, j), expected);
    }
}

TEST(Convolve, MaxMapCollapsesTheUpperClass) {
  random::Engine rng(10);
  const IndexMap f = IndexMap::max_coord(kSquare);
  const Tensor t1 = random::tensor(rng, kSquare, Q), t2 = random::tensor(rng, kSquare, Q);
  const Tensor c = convolve(t1, t2, f);
  const std::vector<MultiIndex> upper = {{0, 1}, {1, 0}, {1, 1}};
  for (const auto& i : kSquare.points())
    for (const auto& j : kSquare.points()) {
      Scalar left = Scalar::zero(Q), right = Scalar::zero(Q);
      for (const auto& m : upper) {
        left += t1(i, m);
        right += t2(m, j);
      }
      EXPECT_EQ(c(i, j), t1(i, {0, 0}) * t2({0, 0}, j) + left * right);
    }
}

TEST(Convolve, RejectsMismatchedDomains) {
  const Tensor t(kSquare, Q);
  const Tensor u(IndexSet::rectangular({3}), Q);
  EXPECT_THROW(convolve(t, u, IndexMap::mixed_radix(kSquare)), DomainError);
  EXPECT_THROW(convolve(t, t, IndexMap::mixed_radix(IndexSet::rectangular({4}))), DomainError);
  EXPECT_THROW(convolve(t, Tensor(kSquare, ScalarKind::ComplexFloat), IndexMap::mixed_radix(kSquare)),
               ScalarKindError);
}

TEST(Star, InvolutionAndPureTensorTranspose) {
  random::Engine rng(12);
  const Tensor t = random::tensor(rng, kSquare, Q);
  EXPECT_EQ(star(star(t)), t);
  EXPECT_EQ(star(identity_tensor(kSquare, Q)), identity_tensor(kSquare, Q));
  const auto a = random::matrix(rng, 2, 2, Q), b = random::matrix(rng, 2, 2, Q);
  EXPECT_EQ(star(pure_tensor({a, b})), pure_tensor({a.transpose(), b.transpose()}));
}

TEST(Act, SumMapOnVectors) {
  const IndexMap f = IndexMap::linear(kSquare, {1, 1});
  const Tensor id = identity_tensor(kSquare, Q);
  TensorVector x(kSquare, Q);
  x.set({0, 1}, Scalar::rational(1));
  x.set({1, 0}, Scalar::rational(1));
  const TensorVector y = act(id, x, f);
  EXPECT_EQ(y({0, 1}), Scalar::rational(2));
  EXPECT_EQ(y({1, 0}), Scalar::rational(2));
  EXPECT_EQ(y({0, 0}), Scalar::rational(0));
}

TEST(Average, InjectiveMapIsIdentity) {
  random::Engine rng(14);
  const IndexSet a = IndexSet::rectangular({2, 3});
  const Tensor t = random::tensor(rng, a, Q);
  EXPECT_EQ(average(t, IndexMap::mixed_radix(a), true), t);
  EXPECT_EQ(average(t, IndexMap::mixed_radix(a), false), t);
}

TEST(Average, NormalizedIsTheClassBlockMean) {
  random::Engine rng(16);
  for (const IndexMap& f : {IndexMap::linear(kSquare, {1, 1}), IndexMap::linear(kSquare, {1, -1}),
                            IndexMap::max_coord(kSquare)}) {
    const Tensor t = random::tensor(rng, kSquare, Q);
    EXPECT_EQ(average(t, f, true), oracle::brute_class_mean(t, f));
  }
}

TEST(Average, RawSumsOverClassPairs) {
  const IndexMap f = IndexMap::max_coord(kSquare);
  Tensor t(kSquare, Q);
  t.set({0, 1}, {1, 1}, Scalar::rational(5));
  const Tensor raw = average(t, f, false);
  // every (upper, upper) pair receives the block sum
  for (const MultiIndex& i : {MultiIndex{0, 1}, MultiIndex{1, 0}, MultiIndex{1, 1}})
    for (const MultiIndex& j : {MultiIndex{0, 1}, MultiIndex{1, 0}, MultiIndex{1, 1}})
      EXPECT_EQ(raw(i, j), Scalar::rational(5));
  EXPECT_EQ(raw({0, 0}, {0, 0}), Scalar::rational(0));
}

TEST(TensorProperty, ConvolveAndActMatchBruteForce) {
  random::Engine rng(18);
  for (int t = 0; t < 40; ++t) {
    const IndexSet a = random::rectangular(rng, 3, 3);
    const IndexMap f = random::map(rng, a);
    const Tensor t1 = random::tensor(rng, a, Q), t2 = random::tensor(rng, a, Q);
    const TensorVector x = random::vector(rng, a, Q);
    EXPECT_EQ(convolve(t1, t2, f), oracle::brute_convolve(t1, t2, f));
    EXPECT_EQ(act(t1, x, f), oracle::brute_act(t1, x, f));
  }
}

TEST(TensorProperty, NormalizedAverageIsIdempotent) {
  random::Engine rng(20);
  for (int t = 0; t < 30; ++t) {
    const IndexSet a = random::rectangular(rng, 2, 3);
    const IndexMap f = random::map(rng, a);
    const Tensor once = average(random::tensor(rng, a, Q), f, true);
    EXPECT_EQ(average(once, f, true), once);
  }
}
