#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace stretchkit::cli {

enum Exit : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParse = 2,
  kDomain = 3,
  kPermutationDomain = 4,
  kScalarKind = 5,
};

struct Options {
  std::string command;
  std::string tensor, left, right, vector, map, spec, out;
  std::string sigma;
  std::string suite;
  bool raw = false;
  bool verify = false;
  bool pretty = false;
  std::size_t trials = 100;
  std::optional<std::uint64_t> seed;
};

/// Runs one subcommand, writing the result and returning an exit code.
/// Errors are reported on stderr.
int run(const Options& opts);

}  // namespace stretchkit::cli
