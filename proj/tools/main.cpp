#include <cstdlib>

#include "CLI11.hpp"
#include "commands.hpp"

namespace cli = stretchkit::cli;

int main(int argc, char** argv) {
  CLI::App app{"stretchkit: stretching maps of even-order tensors"};
  app.require_subcommand(1);
  cli::Options o;
  std::uint64_t seed = 0;

  auto io = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "write the result here instead of stdout");
    sub->add_flag("--pretty", o.pretty, "human-readable table output");
  };
  auto with_map = [&](CLI::App* sub) { sub->add_option("--map", o.map, "index map JSON")->required(); };

  auto* s = app.add_subcommand("stretch", "stretch a tensor into a matrix");
  s->add_option("--tensor", o.tensor, "tensor JSON")->required();
  with_map(s);
  io(s);

  s = app.add_subcommand("stretch-vector", "stretch a vector");
  s->add_option("--vector", o.vector, "vector JSON")->required();
  with_map(s);
  io(s);

  s = app.add_subcommand("convolve", "convolution product of two tensors");
  s->add_option("--left", o.left, "left tensor JSON")->required();
  s->add_option("--right", o.right, "right tensor JSON")->required();
  with_map(s);
  io(s);

  s = app.add_subcommand("act", "action of a tensor on a vector");
  s->add_option("--tensor", o.tensor, "tensor JSON")->required();
  s->add_option("--vector", o.vector, "vector JSON")->required();
  with_map(s);
  io(s);

  s = app.add_subcommand("average", "averaging map; normalized unless --raw");
  s->add_option("--tensor", o.tensor, "tensor JSON")->required();
  s->add_flag("--raw", o.raw, "unnormalized Id*(T*Id)");
  with_map(s);
  io(s);

  s = app.add_subcommand("kappa", "determinant of the stretched matrix");
  s->add_option("--tensor", o.tensor, "tensor JSON")->required();
  with_map(s);
  io(s);

  s = app.add_subcommand("permute", "stretch under the map composed with sigma");
  s->add_option("--tensor", o.tensor, "tensor JSON")->required();
  s->add_option("--sigma", o.sigma, "one-line permutation, e.g. 2,1")->required();
  with_map(s);
  io(s);

  s = app.add_subcommand("jordan", "Jordan form of a stretched Kronecker product");
  s->add_option("--spec", o.spec, "JSON array of Jordan specs")->required();
  s->add_flag("--verify", o.verify, "cross-check with the rank oracle");
  io(s);

  s = app.add_subcommand("tp-witness", "permutation similarity to the tensor-product map");
  with_map(s);
  s->add_option("--tensor", o.tensor, "tensor JSON supplying the index set");
  io(s);

  s = app.add_subcommand("verify", "run a property suite");
  s->add_option("suite", o.suite, "suite name")->required();
  s->add_option("--trials", o.trials, "number of trials (jordan: 0 runs the exhaustive grid)");
  auto* seed_opt = s->add_option("--seed", seed, "RNG seed (default $STRETCHKIT_SEED or 0)");
  io(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kParse;
  }
  o.command = app.get_subcommands().front()->get_name();
  if (seed_opt->count() > 0) o.seed = seed;
  return cli::run(o);
}
