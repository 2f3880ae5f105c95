#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace stretchkit {

/// Aggregate result of a seeded property run.
struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  nlohmann::json failures = nlohmann::json::array();  // first few failing trials

  bool ok() const { return failed == 0; }
  nlohmann::json to_json() const;
};

/// homomorphism, associativity, adjoint, kappa, averaging, permutation,
/// jordan, tp-witness.
const std::vector<std::string>& suite_names();

/// Runs `trials` seeded trials of the named suite; deterministic in
/// (name, trials, seed). For "jordan", trials == 0 runs the exhaustive
/// p, q <= 5 grid instead of random n-fold specs. Throws
/// std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, std::size_t trials, std::uint64_t seed);

}  // namespace stretchkit
