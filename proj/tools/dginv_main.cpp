// Command-line front end: structural analysis, matching enumeration,
// group inverses by three methods, axiom verification, closure
// classification, instance generation, and batch sweeps.
//
// Exit codes: 0 success, 1 parse/IO errors, 2 hypothesis violations
// (reported as a machine-readable JSON line on stdout).

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "dginv/dginv.hpp"
#include "dginv/report_json.hpp"

namespace {

using dginv::json;
using dginv::Matrix;

constexpr int kSchemaVersion = 1;

dginv::Matrix read_input(const std::string& path) {
  if (path == "-") return dginv::read_matrix(std::cin);
  return dginv::read_matrix_file(path);
}

int default_brute_cap() {
  if (const char* env = std::getenv("DGINV_BRUTE_CAP")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (...) {
      throw dginv::ParseError("DGINV_BRUTE_CAP is not an integer");
    }
  }
  return 20;
}

std::string join_labels(const std::vector<int>& vs) {
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i] + 1);
  }
  return out;
}

void print_structure_text(const dginv::StructureReport& s) {
  std::cout << "n=" << s.n << "\n";
  std::cout << "simple_symmetric=" << (s.simple_symmetric ? "true" : "false") << "\n";
  std::cout << "strongly_connected=" << (s.strongly_connected ? "true" : "false") << "\n";
  std::cout << "pendants=" << join_labels(s.pendants) << "\n";
  std::cout << "nonpendants=" << join_labels(s.nonpendants) << "\n";
  std::cout << "in_class_d=" << (s.in_class_d ? "true" : "false") << "\n";
  std::cout << "is_corona=" << (s.is_corona ? "true" : "false") << "\n";
  std::cout << "is_star=" << (s.is_star ? "true" : "false") << "\n";
  for (size_t k = 0; k < s.nonpendants.size(); ++k)
    std::cout << "branch " << s.nonpendants[k] + 1 << ": pendants "
              << join_labels(s.pendant_neighbors[k]) << "\n";
}

std::string matching_text(const dginv::Matching& m) {
  std::string out = "{";
  for (size_t i = 0; i < m.cycles.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(m.cycles[i].u + 1) + "," + std::to_string(m.cycles[i].v + 1) + ")";
  }
  out += "} product=" + dginv::to_string(m.product);
  return out;
}

struct GinvResult {
  std::vector<std::string> methods;
  std::map<std::string, std::string> skipped;  // method -> reason code
  std::optional<Matrix> inverse;
  std::optional<dginv::Rational> delta;
  bool agree = true;
};

GinvResult compute_ginv(const Matrix& a, const std::string& method) {
  GinvResult res;
  auto want = [&](const std::string& m) { return method == "all" || method == m; };

  std::string class_block_reason;
  try {
    dginv::detail::require_class_d_hypotheses(dginv::analyze_structure(dginv::build_digraph(a)));
  } catch (const dginv::ClassViolation& e) {
    class_block_reason = e.code();
  }

  std::optional<Matrix> graph_x, block_x, oracle_x;
  if (want("graph")) {
    if (class_block_reason.empty()) {
      graph_x = dginv::graph_group_inverse(a);
      res.methods.push_back("graph");
      res.delta = dginv::maximum_matchings_class_d(a).delta;
    } else if (method == "graph") {
      throw dginv::ClassViolation(class_block_reason, "combinatorial method refused: " + class_block_reason);
    } else {
      res.skipped["graph"] = class_block_reason;
    }
  }
  if (want("block")) {
    if (class_block_reason.empty()) {
      block_x = dginv::blockwise_group_inverse(a);
      res.methods.push_back("block");
    } else if (method == "block") {
      throw dginv::ClassViolation(class_block_reason, "blockwise method refused: " + class_block_reason);
    } else {
      res.skipped["block"] = class_block_reason;
    }
  }
  if (want("oracle")) {
    oracle_x = dginv::group_inverse_oracle(a);
    res.methods.push_back("oracle");
  }

  for (const auto& x : {graph_x, block_x, oracle_x}) {
    if (!x) continue;
    if (!res.inverse)
      res.inverse = *x;
    else if (*res.inverse != *x)
      res.agree = false;
  }
  return res;
}

int cmd_analyze(const std::string& path, const std::string& format) {
  auto s = dginv::analyze_structure(dginv::build_digraph(read_input(path)));
  if (format == "json") {
    json out = dginv::structure_json(s);
    out["schema_version"] = kSchemaVersion;
    std::cout << out.dump(2) << "\n";
  } else {
    print_structure_text(s);
  }
  return 0;
}

int cmd_matchings(const std::string& path, const std::string& format,
                  const std::string& engine, int cap) {
  Matrix a = read_input(path);
  dginv::MatchingFamily fam;
  if (engine == "brute")
    fam = dginv::maximum_matchings_brute(a, cap);
  else if (engine == "classd")
    fam = dginv::maximum_matchings_class_d(a);
  else
    fam = dginv::maximum_matchings(a, cap);

  if (format == "json") {
    json out = dginv::family_json(fam);
    out["schema_version"] = kSchemaVersion;
    out["engine"] = engine;
    std::cout << out.dump(2) << "\n";
  } else {
    if (fam.degenerate) std::cout << "# degenerate: no 2-cycles\n";
    for (const auto& m : fam.matchings) std::cout << matching_text(m) << "\n";
    std::cout << "Delta=" << dginv::to_string(fam.delta) << "\n";
  }
  return 0;
}

int cmd_ginv(const std::string& path, const std::string& method, const std::string& format,
             bool show_mu) {
  Matrix a = read_input(path);
  GinvResult res = compute_ginv(a, method);
  if (!res.agree) {
    std::cerr << "error: methods disagree; this is a bug\n";
    return 1;
  }

  std::optional<dginv::MuTable> mu;
  if (show_mu) mu = dginv::mu_table(a);

  if (format == "json") {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["methods"] = res.methods;
    if (!res.skipped.empty()) {
      json sk = json::object();
      for (const auto& [m, reason] : res.skipped) sk[m] = reason;
      out["skipped"] = sk;
    }
    out["agree"] = res.agree;
    if (res.delta) out["delta"] = dginv::to_string(*res.delta);
    out["group_inverse"] = dginv::matrix_json(*res.inverse);
    if (mu) out["mu_table"] = dginv::mu_json(*mu);
    std::cout << out.dump(2) << "\n";
  } else {
    std::vector<std::string> comments;
    std::string methods_line = "ginv methods=";
    for (size_t i = 0; i < res.methods.size(); ++i)
      methods_line += (i ? "," : "") + res.methods[i];
    for (const auto& [m, reason] : res.skipped) methods_line += " skipped:" + m + "=" + reason;
    comments.push_back(methods_line + " agree=true");
    if (res.delta) comments.push_back("Delta=" + dginv::to_string(*res.delta));
    if (mu)
      for (const auto& [key, ac] : mu->chains) {
        std::ostringstream line;
        line << "mu[" << key.first + 1 << "][" << key.second + 1 << "]="
             << dginv::to_string(mu->mu(key.first, key.second)) << " chain=";
        for (size_t t = 0; t < ac.chain.vertices.size(); ++t)
          line << (t ? "-" : "") << ac.chain.vertices[t] + 1;
        line << " beta=" << dginv::to_string(mu->beta(key.first, key.second)) << " matchings=";
        for (size_t t = 0; t < ac.matchings.size(); ++t)
          line << (t ? "," : "") << ac.matchings[t] + 1;
        comments.push_back(line.str());
      }
    dginv::write_matrix(std::cout, *res.inverse, comments);
  }
  return 0;
}

int cmd_verify(const std::string& path_a, const std::string& path_x, const std::string& format) {
  Matrix a = dginv::read_matrix_file(path_a);
  Matrix x = dginv::read_matrix_file(path_x);
  auto ax = dginv::verify_group_axioms(a, x);
  if (format == "json") {
    json out = dginv::axioms_json(ax);
    out["schema_version"] = kSchemaVersion;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "axa_equals_a=" << (ax.axa_equals_a ? "true" : "false") << "\n";
    std::cout << "xax_equals_x=" << (ax.xax_equals_x ? "true" : "false") << "\n";
    std::cout << "ax_equals_xa=" << (ax.ax_commutes ? "true" : "false") << "\n";
    std::cout << "is_group_inverse=" << (ax.all() ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& path, const std::string& format) {
  auto v = dginv::classify_closure(read_input(path));
  if (format == "json") {
    json out = dginv::verdict_json(v);
    out["schema_version"] = kSchemaVersion;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "input_class=" << dginv::to_string(v.input_class) << "\n";
    std::cout << "predicted_closure=" << (v.predicted_closure ? "true" : "false") << "\n";
    std::cout << "actual_closure=" << (v.actual_closure ? "true" : "false") << "\n";
    std::cout << "actual_output_class=" << dginv::to_string(v.actual_output_class) << "\n";
  }
  return 0;
}

struct GenArgs {
  std::string family = "classd";
  int n = 8;            // star size
  int k = 3;            // corona non-pendant count
  std::string branches; // explicit branch sizes for classd, e.g. "2,1,3"
  int n_max = 12;
  int extra_edges = 30;
  int weight_max = 5;
  std::optional<uint64_t> seed;
  bool no_shuffle = false;
  std::string out_path;
};

int cmd_gen(const GenArgs& args) {
  uint64_t seed = args.seed ? *args.seed : std::random_device{}();
  dginv::Rng rng(seed);
  dginv::GenOptions opts;
  opts.weight_max = args.weight_max;
  opts.shuffle = !args.no_shuffle;

  Matrix a;
  std::ostringstream prov;
  prov << "dginv gen family=" << args.family;
  if (args.family == "star") {
    a = dginv::gen_star(args.n, rng, opts);
    prov << " n=" << args.n;
  } else if (args.family == "corona") {
    a = dginv::gen_corona(args.k, args.extra_edges, rng, opts);
    prov << " k=" << args.k << " extra-edges=" << args.extra_edges;
  } else if (args.family == "classd" && !args.branches.empty()) {
    std::vector<int> rs;
    std::istringstream in(args.branches);
    std::string tok;
    while (std::getline(in, tok, ',')) rs.push_back(std::stoi(tok));
    a = dginv::gen_class_d(rs, args.extra_edges, rng, opts);
    prov << " branches=" << args.branches << " extra-edges=" << args.extra_edges;
  } else if (args.family == "classd") {
    a = dginv::gen_random_class_d(args.n_max, rng, opts);
    prov << " n-max=" << args.n_max;
  } else if (args.family == "other") {
    a = dginv::gen_other_in_d(args.n_max, rng, opts);
    prov << " n-max=" << args.n_max;
  } else if (args.family == "vanishing") {
    a = dginv::gen_vanishing_delta(args.n_max, rng, opts);
    prov << " n-max=" << args.n_max;
  } else {
    throw dginv::GenerationError("unknown family '" + args.family + "'");
  }
  prov << " weight-max=" << args.weight_max << " seed=" << seed;
  if (args.no_shuffle) prov << " no-shuffle";

  if (args.out_path.empty() || args.out_path == "-")
    dginv::write_matrix(std::cout, a, {prov.str()});
  else
    dginv::write_matrix_file(args.out_path, a, {prov.str()});
  return 0;
}

int cmd_sweep(const dginv::SweepOptions& opts, const std::string& format) {
  dginv::SweepReport rep = dginv::run_sweep(opts);

  json checks = json::object();
  for (const auto& [name, count] : rep.checks) checks[name] = count;
  json failures = json::array();
  for (const auto& f : rep.failures)
    failures.push_back({{"index", f.index},
                        {"check", f.check},
                        {"detail", f.detail},
                        {"matrix", f.matrix_text}});
  json out{{"schema_version", kSchemaVersion},
           {"family", opts.family},
           {"count", opts.count},
           {"seed", opts.seed},
           {"n_max", opts.n_max},
           {"weight_max", opts.weight_max},
           {"instances", rep.instances},
           {"checks", std::move(checks)},
           {"failure_count", rep.failures.size()},
           {"failures", std::move(failures)}};

  // Wall time goes to stderr so the stdout report stays byte-identical
  // under a fixed seed.
  std::cerr << "sweep: " << rep.instances << " instances in " << rep.wall_seconds << "s\n";

  if (format == "text") {
    std::cout << "family=" << opts.family << " instances=" << rep.instances
              << " failures=" << rep.failures.size() << "\n";
    for (const auto& f : rep.failures)
      std::cout << "FAIL instance " << f.index << " check " << f.check << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact group inverses of matrices with simple symmetric digraphs"};
  app.require_subcommand(1);

  std::string input = "-", format = "text";
  std::string engine = "auto", method = "all";
  bool show_mu = false;
  int cap = 0;
  std::string verify_a, verify_x;
  GenArgs gen_args;
  dginv::SweepOptions sweep_opts;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "Structural report of a matrix digraph");
  analyze->add_option("input", input, "Matrix file ('-' for stdin)");
  add_format(analyze);

  auto* matchings = app.add_subcommand("matchings", "Enumerate all maximum matchings");
  matchings->add_option("input", input, "Matrix file ('-' for stdin)");
  add_format(matchings);
  matchings->add_option("--engine", engine, "Matching engine")
      ->check(CLI::IsMember({"auto", "brute", "classd"}))
      ->capture_default_str();
  matchings->add_option("--cap", cap, "Brute-force size cap (default $DGINV_BRUTE_CAP or 20)");

  auto* ginv = app.add_subcommand("ginv", "Compute the group inverse");
  ginv->add_option("input", input, "Matrix file ('-' for stdin)");
  add_format(ginv);
  ginv->add_option("--method", method, "graph | block | oracle | all")
      ->check(CLI::IsMember({"graph", "block", "oracle", "all"}))
      ->capture_default_str();
  ginv->add_flag("--show-mu", show_mu, "Also dump the mu table with chains");

  auto* verify = app.add_subcommand("verify", "Check the three group inverse equations");
  verify->add_option("matrix_a", verify_a, "Matrix A")->required();
  verify->add_option("matrix_x", verify_x, "Candidate inverse X")->required();
  add_format(verify);

  auto* classify = app.add_subcommand("classify", "Closure verdict for the inverse's digraph");
  classify->add_option("input", input, "Matrix file ('-' for stdin)");
  add_format(classify);

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--family", gen_args.family, "star | corona | classd | other | vanishing")
      ->check(CLI::IsMember({"star", "corona", "classd", "other", "vanishing"}))
      ->capture_default_str();
  gen->add_option("--n", gen_args.n, "Star vertex count");
  gen->add_option("--k", gen_args.k, "Corona non-pendant count");
  gen->add_option("--branches", gen_args.branches, "Explicit branch sizes, e.g. 2,1,3");
  gen->add_option("--n-max", gen_args.n_max, "Size bound for random families");
  gen->add_option("--extra-edges", gen_args.extra_edges, "Extra edge percent between non-pendants");
  gen->add_option("--weight-max", gen_args.weight_max, "Weights drawn from [-w, w] without 0");
  gen->add_option("--seed", gen_args.seed, "RNG seed (random when omitted)");
  gen->add_flag("--no-shuffle", gen_args.no_shuffle, "Keep the canonical vertex order");
  gen->add_option("-o,--out", gen_args.out_path, "Output file (stdout when omitted)");

  std::string sweep_format = "json";
  auto* sweep = app.add_subcommand("sweep", "Validate theorems over generated instances");
  sweep->add_option("--family", sweep_opts.family, "star | corona | classd | other | vanishing")
      ->check(CLI::IsMember({"star", "corona", "classd", "other", "vanishing"}))
      ->capture_default_str();
  sweep->add_option("--count", sweep_opts.count, "Instance count")->capture_default_str();
  sweep->add_option("--seed", sweep_opts.seed, "RNG seed")->capture_default_str();
  sweep->add_option("--n-max", sweep_opts.n_max, "Vertex count bound")->capture_default_str();
  sweep->add_option("--weight-max", sweep_opts.weight_max, "Weight bound")->capture_default_str();
  sweep->add_option("--format", sweep_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cap == 0) cap = default_brute_cap();
    if (analyze->parsed()) return cmd_analyze(input, format);
    if (matchings->parsed()) return cmd_matchings(input, format, engine, cap);
    if (ginv->parsed()) return cmd_ginv(input, method, format, show_mu);
    if (verify->parsed()) return cmd_verify(verify_a, verify_x, format);
    if (classify->parsed()) return cmd_classify(input, format);
    if (gen->parsed()) return cmd_gen(gen_args);
    if (sweep->parsed()) return cmd_sweep(sweep_opts, sweep_format);
  } catch (const dginv::HypothesisError& e) {
    json err{{"error", "hypothesis_violation"}, {"code", e.code()}, {"message", e.what()}};
    if (const auto* ng = dynamic_cast<const dginv::NoGroupInverse*>(&e))
      err["vanished"] = dginv::vertices_json(ng->vanished());
    std::cout << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
