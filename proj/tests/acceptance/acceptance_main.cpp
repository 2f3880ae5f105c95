// Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails or exceeds its time limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "displayed.hpp"
#include "oracles.hpp"
#include "stretchkit/jordan.hpp"
#include "stretchkit/random.hpp"
#include "stretchkit/stretching.hpp"
#include "stretchkit/verify.hpp"

using namespace stretchkit;

namespace {

constexpr auto Q = ScalarKind::GaussianRational;
constexpr auto C = ScalarKind::ComplexFloat;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

DenseMatrix jordan2(const Scalar& l) { return DenseMatrix(2, 2, {l, Scalar::one(l.kind()), Scalar::zero(l.kind()), l}); }

bool within_abs(const DenseMatrix& a, const DenseMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (std::abs(a(i, j).to_complex() - b(i, j).to_complex()) > tol) return false;
  return true;
}

const IndexSet kSquare = IndexSet::rectangular({2, 2});

Outcome sum_map_example() {
  Outcome o;
  random::Engine rng(kSeed + 1);
  const IndexMap f = IndexMap::linear(kSquare, {1, 1});
  for (int t = 0; t < 100; ++t) {
    const auto a = random::matrix(rng, 2, 2, C), b = random::matrix(rng, 2, 2, C);
    o.require(within_abs(stretch(pure_tensor({a, b}), f).matrix(), displayed::sum_map_2x2(a, b), 1e-12),
              "cf64 trial " + std::to_string(t));
  }
  for (int t = 0; t < 20; ++t) {
    const Scalar l = random::gq(rng, 5, true), u = random::gq(rng, 5, true);
    o.require(stretch(pure_tensor({jordan2(l), jordan2(u)}), f).matrix() == displayed::sum_map_jordan(l, u),
              "Jordan instance " + std::to_string(t));
  }
  return o;
}

Outcome other_examples() {
  Outcome o;
  random::Engine rng(kSeed + 2);
  const IndexMap diff = IndexMap::linear(kSquare, {1, -1});
  const IndexMap mx = IndexMap::max_coord(kSquare);
  const IndexSet rect = IndexSet::rectangular({2, 3});
  const IndexMap sum23 = IndexMap::linear(rect, {1, 1});
  for (int t = 0; t < 50; ++t) {
    const auto a = random::matrix(rng, 2, 2, Q), b = random::matrix(rng, 2, 2, Q), b3 = random::matrix(rng, 3, 3, Q);
    const Tensor ab = pure_tensor({a, b});
    o.require(stretch(ab, diff).matrix() == displayed::difference_map_2x2(a, b), "difference map trial " + std::to_string(t));
    o.require(stretch(ab, mx).matrix() == displayed::max_map_2x2(a, b), "max map trial " + std::to_string(t));
    o.require(stretch(pure_tensor({a, b3}), sum23).matrix() == displayed::sum_map_2x3(a, b3), "2x3 block trial " + std::to_string(t));
    const Scalar l = random::gq(rng, 5, true), u = random::gq(rng, 5, true);
    const DenseMatrix j = stretch(pure_tensor({jordan2(l), jordan2(u)}), diff).matrix();
    o.require(j == displayed::difference_map_jordan(l, u), "difference Jordan instance " + std::to_string(t));
    o.require(j(1, 1) == Scalar::from_int(Q, 2) * l * u + Scalar::one(Q), "center entry 2*l*u+1");
  }
  return o;
}

Outcome suite(const char* name, std::size_t trials, std::uint64_t seed) {
  Outcome o;
  const SuiteReport r = run_suite(name, trials, seed);
  o.require(r.ok() && r.passed == trials, std::string(name) + ": " + r.to_json().dump());
  return o;
}

Outcome homomorphism() { return suite("homomorphism", 200, kSeed + 3); }

Outcome convolution_algebra() {
  Outcome o;
  for (const char* name : {"associativity", "adjoint", "kappa"}) {
    const Outcome s = suite(name, 100, kSeed + 4);
    o.require(s.ok, s.note);
  }
  return o;
}

Outcome jordan_grid() {
  Outcome o;
  const SuiteReport grid = run_suite("jordan", 0, 0);
  o.require(grid.ok() && grid.trials == 100, "grid: " + grid.to_json().dump());
  // Cases with exactly one zero factor: closed form and oracle both report eigenvalue 0 only.
  for (std::size_t p = 1; p <= 5; ++p)
    for (std::size_t q = 1; q <= 5; ++q)
      for (const auto& [a, b] : {std::pair{2L, 0L}, std::pair{0L, 3L}}) {
        const JordanSpec closed = jordan_pair(p, Scalar::rational(a), q, Scalar::rational(b));
        for (const auto& blk : closed.blocks()) o.require(blk.eigenvalue.is_zero(), "closed form eigenvalue not 0");
        const DenseMatrix m = kron(jordan_cell(p, Scalar::rational(a)), jordan_cell(q, Scalar::rational(b)));
        const std::vector<Scalar> zero = {Scalar::zero(Q)};
        const JordanSpec oracle = jordan_oracle(m, zero).to_spec();
        o.require(oracle == closed, "oracle with eigenvalue {0} alone covers the dimension");
      }
  const SuiteReport nfold = run_suite("jordan", 20, kSeed + 5);
  o.require(nfold.ok() && nfold.passed == 20, "n-fold: " + nfold.to_json().dump());
  return o;
}

std::vector<std::vector<std::size_t>> compositions(std::size_t n) {
  if (n == 0) return {{}};
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t first = 1; first <= n; ++first)
    for (auto rest : compositions(n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

Outcome explicit_pairs() {
  Outcome o;
  random::Engine rng(kSeed + 6);
  std::vector<std::vector<std::size_t>> shapes;
  for (std::size_t n = 1; n <= 6; ++n)
    for (auto& c : compositions(n)) shapes.push_back(std::move(c));
  auto make = [&](const std::vector<std::size_t>& sizes) {
    std::vector<JordanBlock> blocks;
    for (std::size_t s : sizes) blocks.push_back({s, random::gq(rng, 3, true)});
    return JordanSpec(std::move(blocks));
  };
  std::size_t cases = 0;
  for (const auto& cs : shapes)
    for (const auto& ds : shapes) {
      // Block order inside JordanSpec is canonical, so sizes are exhausted up to reordering.
      const JordanSpec c = make(cs), d = make(ds);
      const Tensor t = pure_tensor({c.to_matrix(), d.to_matrix()});
      o.require(explicit_pair_matrix(c, d) == stretch(t, IndexMap::mixed_radix(t.domain())).matrix(),
                "explicit matrix differs from stretch");
      ++cases;
    }
  o.note = o.ok ? std::to_string(cases) + " pairs" : o.note;
  return o;
}

Outcome witness() {
  Outcome o;
  random::Engine rng(kSeed + 7);
  for (int t = 0; t < 20; ++t) {
    const IndexSet a = random::rectangular_bounded(rng, 3, 16);
    const IndexMap f = random::injective_table(rng, a);
    const SimilarityWitness w = tp_similarity_witness(f);
    const IndexMap tp = IndexMap::mixed_radix(a);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) {
        const Tensor e = matrix_unit(a, i, j, Q);
        const DenseMatrix conj = oracle::naive_mul(oracle::naive_mul(w.matrix, stretch(e, tp).matrix()), w.matrix.transpose());
        o.require(conj == oracle::brute_stretch(e, f).matrix, "trial " + std::to_string(t));
      }
    o.require(verify_similarity_witness(w, f).passed, "library self-check trial " + std::to_string(t));
  }
  return o;
}

Outcome averaging() {
  Outcome o;
  random::Engine rng(kSeed + 8);
  for (const IndexMap& f : {IndexMap::linear(kSquare, {1, 1}), IndexMap::linear(kSquare, {1, -1}), IndexMap::max_coord(kSquare)}) {
    const std::size_t classes = partition(f).size();
    const DenseMatrix d = class_size_matrix(f, Q);
    for (int t = 0; t < 50; ++t) {
      const Tensor x = random::tensor(rng, kSquare, Q);
      const Tensor hat = average(x, f, true);
      const DenseMatrix rho = oracle::brute_stretch(x, f).matrix;
      o.require(hat == oracle::brute_class_mean(x, f), "normalized average is not the block mean");
      o.require(oracle::brute_stretch(hat, f).matrix == rho, "rho(Psi^ T) != rho(T)");
      o.require(oracle::brute_stretch(average(x, f, false), f).matrix == oracle::naive_mul(oracle::naive_mul(d, rho), d),
                "raw identity D rho D");
      o.require(average(hat, f, true) == hat, "not idempotent");
      const CheckReport r = verify_averaging_decomposition(x, f);
      o.require(r.passed && r.details["indicator_rank"] == classes * classes, r.to_json().dump());
    }
  }
  return o;
}

Outcome permutations() { return suite("permutation", 100, kSeed + 9); }

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "sum map 2x2 display (cf64 1e-12, Jordan instance exact)", 1.0, sum_map_example},
      {2, "difference map, 2x3 block and max map displays (exact)", 1.0, other_examples},
      {3, "homomorphism suite, 200 trials (exact)", 30.0, homomorphism},
      {4, "associativity, identity rules, transpose law, kappa (100 each)", 30.0, convolution_algebra},
      {5, "Jordan grid p,q<=5 plus 20 n-fold specs vs oracle", 120.0, jordan_grid},
      {6, "explicit Jordan-sum matrix vs generic stretch, dims<=6", 60.0, explicit_pairs},
      {7, "tensor-product similarity witness, 20 injective tables", 30.0, witness},
      {8, "averaging decomposition on {0,1}^2, 50 tensors per map", 10.0, averaging},
      {9, "permutation operators, 100 trials", 10.0, permutations},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_s) {
      o.ok = false;
      o.note = "over time limit";
    }
    failed += o.ok ? 0 : 1;
    std::printf("%s %d %s [%.3fs / %.0fs]%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_s,
                o.note.empty() ? "" : " ", o.note.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
