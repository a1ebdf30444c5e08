#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdst/bench.hpp"
#include "mdst/certificate_io.hpp"
#include "mdst/driver.hpp"
#include "mdst/errors.hpp"
#include "mdst/generators.hpp"
#include "mdst/graph.hpp"
#include "mdst/oracle.hpp"
#include "mdst/spanning_tree.hpp"

namespace {

int exit_code_for(mdst::ErrorKind kind) {
  using mdst::ErrorKind;
  switch (kind) {
    case ErrorKind::ComponentNotConnected:
    case ErrorKind::ComponentsOverlap:
    case ErrorKind::UncoveredBoundaryEdge:
    case ErrorKind::BoundOverclaimed:
    case ErrorKind::NotConnected:
      return 1;  // certificate rejected
    case ErrorKind::BadHeader:
    case ErrorKind::IdOutOfRange:
    case ErrorKind::SelfLoop:
    case ErrorKind::DuplicateEdge:
    case ErrorKind::Disconnected:
      return 2;  // malformed input data
    default:
      return 3;  // invalid parameters
  }
}

struct SolveArgs {
  std::string graph_path;
  double eps = 0.1;
  unsigned long long seed = 0;
  long long time_limit_ms = 0;
  bool audit = false;
  std::string tree_out;
  std::string cert_out;
  double override_large_step = -1.0;
  double override_small_floor = -1.0;
};

struct VerifyArgs {
  std::string graph_path;
  std::string tree_path;
  std::string cert_path;
};

struct ExactArgs {
  std::string graph_path;
  std::string method = "branch";
  std::string tree_out;
};

struct GenArgs {
  std::string family;
  int n = 8;
  int dim = 3;
  int branches = 3;
  int extra = 0;
  double p = 0.1;
  unsigned long long seed = 0;
  std::string out;
};

struct BenchArgs {
  std::vector<int> sizes{4096, 8192, 16384, 32768, 65536, 131072};
  double eps = 0.1;
  unsigned long long seed = 0;
  std::string out;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    mdst::write_text_file(path, text);
}

int run_solve(const SolveArgs& args) {
  const mdst::Graph g = mdst::parse_graph_file(args.graph_path);
  mdst::RunConfig cfg;
  cfg.eps_user = args.eps;
  cfg.seed = args.seed;
  cfg.time_limit_ms = args.time_limit_ms;
  cfg.audit = args.audit;
  if (args.override_large_step >= 0.0) cfg.override.large_step = args.override_large_step;
  if (args.override_small_floor >= 0.0) cfg.override.small_floor = args.override_small_floor;
  const mdst::RunResult result = mdst::improved_mdst(g, cfg);
  if (!args.tree_out.empty()) mdst::save_tree(result.tree, args.tree_out);
  if (!args.cert_out.empty()) {
    if (!result.certificate)
      mdst::fail(mdst::ErrorKind::BadParams,
                 "run finished without a certificate; nothing to write");
    mdst::save_certificate(*result.certificate, args.cert_out);
  }
  std::cout << mdst::solve_report_json(g, cfg, result);
  return 0;
}

int run_verify(const VerifyArgs& args) {
  const mdst::Graph g = mdst::parse_graph_file(args.graph_path);
  const mdst::SpanningTree t = mdst::load_tree(g, args.tree_path);
  const mdst::LowerBoundCertificate cert = mdst::load_certificate(args.cert_path);
  const long long bound = mdst::verify_certificate(g, t, cert);
  nlohmann::json j;
  j["claimed_bound"] = cert.bound;
  j["verified_bound"] = bound;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_exact(const ExactArgs& args) {
  const mdst::Graph g = mdst::parse_graph_file(args.graph_path);
  mdst::ExactResult result;
  if (args.method == "branch")
    result = mdst::exact_mdst(g);
  else if (args.method == "subsets")
    result = mdst::exact_mdst_subsets(g);
  else
    mdst::fail(mdst::ErrorKind::BadParams, "unknown method: " + args.method);
  if (!args.tree_out.empty())
    mdst::save_tree(mdst::SpanningTree(g, result.tree_edge_ids), args.tree_out);
  nlohmann::json j;
  j["delta_star"] = result.delta_star;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_gen(const GenArgs& args) {
  std::optional<mdst::GenResult> result;
  if (args.family == "path")
    result = mdst::gen_path(args.n);
  else if (args.family == "cycle")
    result = mdst::gen_cycle(args.n);
  else if (args.family == "star")
    result = mdst::gen_star(args.n);
  else if (args.family == "complete")
    result = mdst::gen_complete(args.n);
  else if (args.family == "hypercube")
    result = mdst::gen_hypercube(args.dim);
  else if (args.family == "wheel")
    result = mdst::gen_wheel(args.n);
  else if (args.family == "broom")
    result = mdst::gen_broom(args.n, args.branches);
  else if (args.family == "ham-path")
    result = mdst::gen_ham_path_plus(args.n, args.extra, args.seed);
  else if (args.family == "gnp")
    result = mdst::gen_gnp(args.n, args.p, args.seed);
  else
    mdst::fail(mdst::ErrorKind::BadParams, "unknown family: " + args.family);
  emit(mdst::format_dimacs(result->graph), args.out);
  return 0;
}

int run_bench(const BenchArgs& args) {
  const std::vector<mdst::BenchRow> rows =
      mdst::run_bench_ladder(args.sizes, args.eps, args.seed);
  emit(mdst::bench_csv(rows), args.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spanning trees of approximately minimum maximum degree"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "compute a low-degree spanning tree");
  solve->add_option("graph", solve_args.graph_path, "input graph file")->required();
  solve->add_option("--eps", solve_args.eps, "accuracy parameter, in (0, 1/6)");
  solve->add_option("--seed", solve_args.seed, "seed echoed into the report");
  solve->add_option("--time-limit-ms", solve_args.time_limit_ms,
                    "stop between reductions after this many milliseconds (0 = off)");
  solve->add_flag("--audit", solve_args.audit, "run expensive internal self-checks");
  solve->add_option("--tree-out", solve_args.tree_out, "write the tree as edge lines");
  solve->add_option("--cert-out", solve_args.cert_out,
                    "write the lower-bound certificate (errors if none was produced)");
  solve->add_option("--override-large-step", solve_args.override_large_step,
                    "testing: replace the coarse-phase threshold");
  solve->add_option("--override-small-floor", solve_args.override_small_floor,
                    "testing: replace the windowed-phase floor");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "check a lower-bound certificate");
  verify->add_option("graph", verify_args.graph_path, "input graph file")->required();
  verify->add_option("tree", verify_args.tree_path, "spanning tree file")->required();
  verify->add_option("certificate", verify_args.cert_path, "certificate JSON file")->required();

  ExactArgs exact_args;
  CLI::App* exact = app.add_subcommand("exact", "exact optimum on tiny graphs");
  exact->add_option("graph", exact_args.graph_path, "input graph file")->required();
  exact->add_option("--method", exact_args.method, "branch (default, n <= 9) or subsets (n <= 6)");
  exact->add_option("--tree-out", exact_args.tree_out, "write an optimal tree");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("family", gen_args.family,
                  "path|cycle|star|complete|hypercube|wheel|broom|ham-path|gnp")
      ->required();
  gen->add_option("-n,--n", gen_args.n, "vertex count");
  gen->add_option("--dim", gen_args.dim, "hypercube dimension");
  gen->add_option("--branches", gen_args.branches, "broom leaf count");
  gen->add_option("--extra", gen_args.extra, "ham-path: extra non-path edges");
  gen->add_option("--p", gen_args.p, "gnp edge probability");
  gen->add_option("--seed", gen_args.seed, "random seed");
  gen->add_option("--out", gen_args.out, "output file (default stdout)");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "time the solver on a size ladder");
  bench->add_option("--sizes", bench_args.sizes, "comma-separated vertex counts")
      ->delimiter(',');
  bench->add_option("--eps", bench_args.eps, "accuracy parameter");
  bench->add_option("--seed", bench_args.seed, "random seed");
  bench->add_option("--out", bench_args.out, "output CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (app.got_subcommand(solve)) return run_solve(solve_args);
    if (app.got_subcommand(verify)) return run_verify(verify_args);
    if (app.got_subcommand(exact)) return run_exact(exact_args);
    if (app.got_subcommand(gen)) return run_gen(gen_args);
    if (app.got_subcommand(bench)) return run_bench(bench_args);
  } catch (const mdst::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
