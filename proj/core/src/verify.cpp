#include "stretchkit/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "stretchkit/jordan.hpp"
#include "stretchkit/json_io.hpp"
#include "stretchkit/random.hpp"
#include "stretchkit/stretching.hpp"
#include "stretchkit/tensor.hpp"

namespace stretchkit {

namespace {

constexpr auto kExact = ScalarKind::GaussianRational;
constexpr std::size_t kMaxRecordedFailures = 5;

using Engine = random::Engine;
// Returns an empty json on success, a description of the failure otherwise.
using Trial = std::function<json(Engine&, std::size_t)>;

json describe_map(const IndexMap& map) {
  return {{"index_set", index_set_to_json(map.domain())}, {"map", index_map_to_json(map)}};
}

json homomorphism_trial(Engine& rng, std::size_t) {
  const IndexSet domain = random::rectangular(rng, 3, 3);
  const IndexMap map = random::map(rng, domain);
  const Tensor t1 = random::tensor(rng, domain, kExact);
  const Tensor t2 = random::tensor(rng, domain, kExact);
  const TensorVector x = random::vector(rng, domain, kExact);
  const bool product = stretch(convolve(t1, t2, map), map).matrix() ==
                       mat_mul(stretch(t1, map).matrix(), stretch(t2, map).matrix());
  const bool action =
      stretch_vector(act(t1, x, map), map) == mat_vec(stretch(t1, map).matrix(), stretch_vector(x, map));
  if (product && action) return {};
  return {{"product", product}, {"action", action}, {"setting", describe_map(map)}};
}

json associativity_trial(Engine& rng, std::size_t) {
  const IndexSet domain = random::rectangular(rng, 3, 3);
  const IndexMap map = random::map(rng, domain);
  const Tensor t1 = random::tensor(rng, domain, kExact);
  const Tensor t2 = random::tensor(rng, domain, kExact);
  const Tensor t3 = random::tensor(rng, domain, kExact);
  const bool assoc = convolve(convolve(t1, t2, map), t3, map) == convolve(t1, convolve(t2, t3, map), map);

  const Tensor id = identity_tensor(domain, kExact);
  const ClassPartition classes = partition(map);
  const Tensor right = convolve(t1, id, map);
  const Tensor left = convolve(id, t1, map);
  bool identity_rules = true;
  for (std::size_t i = 0; i < domain.size() && identity_rules; ++i)
    for (std::size_t j = 0; j < domain.size() && identity_rules; ++j) {
      Scalar row_sum = Scalar::zero(kExact), col_sum = Scalar::zero(kExact);
      for (std::size_t m : classes.classes[classes.class_of[j]].positions) row_sum += t1.at(i, m);
      for (std::size_t m : classes.classes[classes.class_of[i]].positions) col_sum += t1.at(m, j);
      identity_rules = right.at(i, j) == row_sum && left.at(i, j) == col_sum;
    }
  if (assoc && identity_rules) return {};
  return {{"associative", assoc}, {"identity_rules", identity_rules}, {"setting", describe_map(map)}};
}

json adjoint_trial(Engine& rng, std::size_t) {
  const IndexSet domain = random::rectangular(rng, 3, 3);
  const IndexMap map = random::map(rng, domain);
  const Tensor t1 = random::tensor(rng, domain, kExact);
  const Tensor t2 = random::tensor(rng, domain, kExact);
  const DenseMatrix lhs = stretch(convolve(t2, t1, map), map).matrix().transpose();
  const DenseMatrix rhs = stretch(convolve(star(t1), star(t2), map), map).matrix();
  if (lhs == rhs) return {};
  return {{"transpose_law", false}, {"setting", describe_map(map)}};
}

json kappa_trial(Engine& rng, std::size_t) {
  const IndexSet domain = random::rectangular(rng, 2, 3);
  const IndexMap map = random::map(rng, domain);
  const Tensor t1 = random::tensor(rng, domain, kExact);
  const Tensor t2 = random::tensor(rng, domain, kExact);
  const Scalar lhs = kappa(convolve(t1, t2, map), map);
  const Scalar rhs = kappa(t1, map) * kappa(t2, map);
  if (lhs == rhs) return {};
  return {{"lhs", scalar_to_json(lhs)}, {"rhs", scalar_to_json(rhs)}, {"setting", describe_map(map)}};
}

json averaging_trial(Engine& rng, std::size_t) {
  const IndexSet domain = random::rectangular(rng, 2, 3);
  const IndexMap map = random::map(rng, domain);
  const Tensor t = random::tensor(rng, domain, kExact);
  CheckReport report = verify_averaging_decomposition(t, map);
  const Tensor once = average(t, map, true);
  const bool idempotent = average(once, map, true) == once;
  if (report.passed && idempotent) return {};
  return {{"decomposition", report.to_json()}, {"idempotent", idempotent}, {"setting", describe_map(map)}};
}

json permutation_trial(Engine& rng, std::size_t) {
  // Cubes {0..n-1}^l are closed under every sigma.
  const auto l = static_cast<std::size_t>(random::uniform_int(rng, 2, 3));
  const auto n = static_cast<std::size_t>(random::uniform_int(rng, 1, 3));
  const IndexSet cube = IndexSet::rectangular(std::vector<std::size_t>(l, n));
  const Permutation s1 = random::permutation(rng, l);
  const Permutation s2 = random::permutation(rng, l);
  const Tensor t = random::tensor(rng, cube, kExact);

  const IndexMap map = random::map(rng, cube);
  const bool composition =
      stretch(t, compose_with_permutation(compose_with_permutation(map, s2), s1)) ==
      permute_stretch(t, map, compose(s2, s1));
  const bool inverse =
      compose_with_permutation(compose_with_permutation(map, s1), s1.inverse()).values() == map.values();

  const IndexMap tp = IndexMap::mixed_radix(cube);
  const DenseMatrix before = stretch(t, tp).matrix();
  const DenseMatrix after = permute_stretch(t, tp, s1).matrix();
  auto sorted_entries = [](const DenseMatrix& m) {
    std::vector<Scalar> v(m.data().begin(), m.data().end());
    std::sort(v.begin(), v.end(), [](const Scalar& a, const Scalar& b) { return canonical_compare(a, b) < 0; });
    return v;
  };
  const bool isometry = frobenius_norm2(before) == frobenius_norm2(after) &&
                        sorted_entries(before) == sorted_entries(after);

  const IndexMap symmetric = random::uniform_int(rng, 0, 1) ? IndexMap::max_coord(cube)
                                                            : random::symmetric_table(rng, cube);
  const CheckReport kernel = kernel_preservation_check(symmetric, s1, 3, rng());

  if (composition && inverse && isometry && kernel.passed) return {};
  return {{"composition", composition},
          {"inverse", inverse},
          {"isometry", isometry},
          {"kernel", kernel.to_json()},
          {"sigma1", s1.one_line()},
          {"sigma2", s2.one_line()}};
}

json tp_witness_trial(Engine& rng, std::size_t) {
  const IndexSet domain = random::rectangular_bounded(rng, 3, 16);
  const IndexMap map = random::injective_table(rng, domain);
  const SimilarityWitness w = tp_similarity_witness(map);
  const CheckReport report = verify_similarity_witness(w, map);
  if (report.passed) return {};
  return {{"report", report.to_json()}, {"setting", describe_map(map)}};
}

json jordan_random_trial(Engine& rng, std::size_t) {
  // Three factors with total dimension <= 24.
  std::vector<std::size_t> dims;
  std::size_t total = 1;
  for (int f = 0; f < 3; ++f) {
    const std::size_t cap = std::min<std::size_t>(4, 24 / total);
    const auto d = static_cast<std::size_t>(random::uniform_int(rng, 1, static_cast<std::int64_t>(std::max<std::size_t>(cap, 1))));
    dims.push_back(d);
    total *= d;
  }
  std::vector<JordanSpec> specs;
  for (std::size_t d : dims) specs.push_back(random::jordan_spec(rng, d));
  const CheckReport report = verify_jordan_nfold(specs);
  if (report.passed) return {};
  json factors = json::array();
  for (const auto& s : specs) factors.push_back(jordan_spec_to_json(s));
  return {{"factors", factors}, {"report", report.to_json()}};
}

SuiteReport run_trials(std::string_view name, std::size_t trials, std::uint64_t seed, const Trial& trial) {
  SuiteReport report;
  report.suite = std::string(name);
  report.seed = seed;
  report.trials = trials;
  for (std::size_t k = 0; k < trials; ++k) {
    // Per-trial engines keep trial k reproducible on its own.
    Engine rng(seed * 0x9E3779B97F4A7C15ull + k);
    json failure = trial(rng, k);
    if (failure.is_null()) {
      ++report.passed;
    } else {
      ++report.failed;
      if (report.failures.size() < kMaxRecordedFailures) {
        failure["trial"] = k;
        report.failures.push_back(std::move(failure));
      }
    }
  }
  return report;
}

SuiteReport jordan_grid() {
  SuiteReport report;
  report.suite = "jordan";
  const std::vector<std::pair<long, long>> pairs = {{2, 3}, {2, 0}, {0, 3}, {0, 0}};
  for (std::size_t p = 1; p <= 5; ++p)
    for (std::size_t q = 1; q <= 5; ++q)
      for (const auto& [a, b] : pairs) {
        ++report.trials;
        const std::vector<JordanSpec> specs = {JordanSpec({{p, Scalar::rational(a)}}),
                                               JordanSpec({{q, Scalar::rational(b)}})};
        const CheckReport check = verify_jordan_nfold(specs);
        if (check.passed) {
          ++report.passed;
        } else {
          ++report.failed;
          if (report.failures.size() < kMaxRecordedFailures) {
            report.failures.push_back({{"p", p}, {"q", q}, {"a", a}, {"b", b}, {"report", check.to_json()}});
          }
        }
      }
  return report;
}

}  // namespace

json SuiteReport::to_json() const {
  return {{"suite", suite}, {"seed", seed},     {"trials", trials},
          {"passed", passed}, {"failed", failed}, {"failures", failures},
          {"ok", ok()}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"homomorphism", "associativity", "adjoint", "kappa",
                                                 "averaging",    "permutation",   "jordan",  "tp-witness"};
  return names;
}

SuiteReport run_suite(std::string_view name, std::size_t trials, std::uint64_t seed) {
  if (name == "homomorphism") return run_trials(name, trials, seed, homomorphism_trial);
  if (name == "associativity") return run_trials(name, trials, seed, associativity_trial);
  if (name == "adjoint") return run_trials(name, trials, seed, adjoint_trial);
  if (name == "kappa") return run_trials(name, trials, seed, kappa_trial);
  if (name == "averaging") return run_trials(name, trials, seed, averaging_trial);
  if (name == "permutation") return run_trials(name, trials, seed, permutation_trial);
  if (name == "tp-witness") return run_trials(name, trials, seed, tp_witness_trial);
  if (name == "jordan") {
    if (trials == 0) {
      SuiteReport grid = jordan_grid();
      grid.seed = seed;
      return grid;
    }
    return run_trials(name, trials, seed, jordan_random_trial);
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace stretchkit
