#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "stretchkit/errors.hpp"
#include "stretchkit/jordan.hpp"
#include "stretchkit/json_io.hpp"
#include "stretchkit/stretching.hpp"
#include "stretchkit/verify.hpp"

namespace stretchkit::cli {

namespace {

struct VerificationFailure {
  json result;
};

json read_json(const std::string& path, const char* flag) {
  if (path.empty()) throw ParseError(std::string("missing required option ") + flag);
  std::ifstream in(path);
  if (!in) throw ParseError(std::string(flag) + ": cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(flag) + ": " + path + ": " + e.what());
  }
}

// A map document may carry its own "index_set"; otherwise it lives on the
// domain of the accompanying tensor or vector.
IndexMap read_map(const std::string& path, const std::optional<IndexSet>& domain) {
  const json j = read_json(path, "--map");
  if (j.is_object() && j.contains("index_set")) {
    IndexSet own = index_set_from_json(j.at("index_set"));
    if (domain && !(own == *domain)) {
      throw DomainError("--map: index_set does not match the index set of the input tensor");
    }
    return index_map_from_json(j, own);
  }
  if (!domain) throw ParseError("--map: no \"index_set\" given and no tensor to take it from");
  return index_map_from_json(j, *domain);
}

Tensor read_tensor(const std::string& path, const char* flag) { return tensor_from_json(read_json(path, flag)); }

std::string pad(const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; }

std::string short_scalar(const Scalar& s) {
  if (s.is_exact()) {
    const auto& q = s.as_rational();
    auto part = [](const mpq_class& v) { return v.get_den() == 1 ? v.get_num().get_str() : v.get_str(); };
    if (q.im == 0) return part(q.re);
    if (q.re == 0) return part(q.im) + "i";
    return part(q.re) + (q.im > 0 ? "+" : "") + part(q.im) + "i";
  }
  std::ostringstream o;
  o << std::setprecision(6) << s.as_complex().real();
  if (s.as_complex().imag() != 0) o << std::showpos << s.as_complex().imag() << "i";
  return o.str();
}

std::string table(const DenseMatrix& m, const std::optional<Labels>& rl, const std::optional<Labels>& cl) {
  std::vector<std::vector<std::string>> cells(m.rows() + 1, std::vector<std::string>(m.cols() + 1));
  for (std::size_t c = 0; c < m.cols(); ++c) cells[0][c + 1] = cl ? std::to_string((*cl)[c]) : std::to_string(c);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    cells[r + 1][0] = rl ? std::to_string((*rl)[r]) : std::to_string(r);
    for (std::size_t c = 0; c < m.cols(); ++c) cells[r + 1][c + 1] = short_scalar(m(r, c));
  }
  std::vector<std::size_t> width(m.cols() + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream o;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) o << (c ? "  " : "") << pad(cells[r][c], width[c]);
    o << '\n';
    if (r == 0) o << std::string(o.str().size() - 1, '-') << '\n';
  }
  return o.str();
}

std::string render_pretty(const json& result) {
  if (result.is_object() && result.contains("rows") && result.contains("data")) {
    const DenseMatrix m = matrix_from_json(result);
    return table(m, m.row_labels(), m.col_labels());
  }
  if (result.is_object() && result.contains("blocks")) {
    std::ostringstream o;
    for (const auto& b : result["blocks"]) {
      o << "J_" << b["size"].get<std::size_t>() << "(" << short_scalar(scalar_from_json(b["eigenvalue"])) << ")\n";
    }
    if (result.contains("agree")) o << "oracle agrees: " << (result["agree"].get<bool>() ? "yes" : "no") << '\n';
    return o.str();
  }
  return result.dump(2) + '\n';
}

void emit(const Options& opts, const json& result) {
  const std::string text = opts.pretty ? render_pretty(result) : result.dump() + '\n';
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opts.out);
  if (!f) throw ParseError("--out: cannot write '" + opts.out + "'");
  f << text;
}

std::uint64_t resolve_seed(const Options& opts) {
  if (opts.seed) return *opts.seed;
  if (const char* env = std::getenv("STRETCHKIT_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("STRETCHKIT_SEED: not an unsigned integer: '") + env + "'");
  }
  return 0;
}

std::vector<JordanSpec> read_specs(const std::string& path) {
  const json j = read_json(path, "--spec");
  const json& list = j.is_object() && j.contains("factors") ? j.at("factors") : j;
  if (!list.is_array() || list.empty()) throw ParseError("--spec: expected a nonempty array of Jordan specs");
  std::vector<JordanSpec> specs;
  for (const auto& s : list) specs.push_back(jordan_spec_from_json(s));
  return specs;
}

json cmd_stretch(const Options& o) {
  const Tensor t = read_tensor(o.tensor, "--tensor");
  return stretched_to_json(stretch(t, read_map(o.map, t.domain())));
}

json cmd_stretch_vector(const Options& o) {
  const TensorVector x = tensor_vector_from_json(read_json(o.vector, "--vector"));
  return dense_vector_to_json(stretch_vector(x, read_map(o.map, x.domain())));
}

json cmd_convolve(const Options& o) {
  const Tensor l = read_tensor(o.left, "--left");
  const Tensor r = read_tensor(o.right, "--right");
  return tensor_to_json(convolve(l, r, read_map(o.map, l.domain())));
}

json cmd_act(const Options& o) {
  const Tensor t = read_tensor(o.tensor, "--tensor");
  const TensorVector x = tensor_vector_from_json(read_json(o.vector, "--vector"));
  return tensor_vector_to_json(act(t, x, read_map(o.map, t.domain())));
}

json cmd_average(const Options& o) {
  const Tensor t = read_tensor(o.tensor, "--tensor");
  return tensor_to_json(average(t, read_map(o.map, t.domain()), !o.raw));
}

json cmd_kappa(const Options& o) {
  const Tensor t = read_tensor(o.tensor, "--tensor");
  return {{"kappa", scalar_to_json(kappa(t, read_map(o.map, t.domain())))}};
}

Permutation read_sigma(const Options& o) {
  if (o.sigma.empty()) throw ParseError("missing required option --sigma");
  try {
    return Permutation::parse(o.sigma);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("--sigma: ") + e.what());
  }
}

json cmd_permute(const Options& o) {
  const Tensor t = read_tensor(o.tensor, "--tensor");
  const IndexMap m = read_map(o.map, t.domain());
  return stretched_to_json(permute_stretch(t, m, read_sigma(o)));
}

json cmd_jordan(const Options& o) {
  const std::vector<JordanSpec> specs = read_specs(o.spec);
  json out = jordan_spec_to_json(jordan_nfold(specs));
  if (!o.verify) return out;
  for (const auto& s : specs)
    for (const auto& b : s.blocks())
      if (!b.eigenvalue.is_exact()) throw ScalarKindError("--verify needs exact (gq) eigenvalues");
  const CheckReport r = verify_jordan_nfold(specs);
  out["oracle"] = r.details["oracle"];
  out["agree"] = r.passed;
  if (!r.passed) throw VerificationFailure{out};
  return out;
}

json cmd_tp_witness(const Options& o) {
  std::optional<IndexSet> domain;
  if (!o.tensor.empty()) domain = read_tensor(o.tensor, "--tensor").domain();
  const IndexMap m = read_map(o.map, domain);
  const SimilarityWitness w = tp_similarity_witness(m);
  const CheckReport r = verify_similarity_witness(w, m);
  json out = {{"sigma", w.sigma}, {"labels", w.labels}, {"matrix", matrix_to_json(w.matrix)}, {"check", r.to_json()}};
  if (!r.passed) throw VerificationFailure{out};
  return out;
}

json cmd_verify(const Options& o) {
  SuiteReport r;
  try {
    r = run_suite(o.suite, o.trials, resolve_seed(o));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (!r.ok()) throw VerificationFailure{r.to_json()};
  return r.to_json();
}

const std::map<std::string, std::function<json(const Options&)>>& handlers() {
  static const std::map<std::string, std::function<json(const Options&)>> h = {
      {"stretch", cmd_stretch},   {"stretch-vector", cmd_stretch_vector},
      {"convolve", cmd_convolve}, {"act", cmd_act},
      {"average", cmd_average},   {"kappa", cmd_kappa},
      {"permute", cmd_permute},   {"jordan", cmd_jordan},
      {"tp-witness", cmd_tp_witness}, {"verify", cmd_verify}};
  return h;
}

int fail(int code, const std::string& what) {
  std::cerr << "error: " << what << '\n';
  return code;
}

}  // namespace

int run(const Options& opts) {
  const auto it = handlers().find(opts.command);
  if (it == handlers().end()) return fail(kParse, "unknown command '" + opts.command + "'");
  try {
    emit(opts, it->second(opts));
    return kOk;
  } catch (const VerificationFailure& f) {
    emit(opts, f.result);
    return kVerifyFailed;
  } catch (const ParseError& e) {
    return fail(kParse, e.what());
  } catch (const json::exception& e) {
    return fail(kParse, e.what());
  } catch (const PermutationDomainError& e) {
    return fail(kPermutationDomain, e.what());
  } catch (const DomainError& e) {
    return fail(kDomain, e.what());
  } catch (const DimensionError& e) {
    return fail(kDomain, e.what());
  } catch (const ScalarKindError& e) {
    return fail(kScalarKind, e.what());
  }
}

}  // namespace stretchkit::cli
