#include "mdst/bench.hpp"

#include <sstream>

#include "mdst/driver.hpp"
#include "mdst/errors.hpp"
#include "mdst/generators.hpp"

namespace mdst {

std::vector<BenchRow> run_bench_ladder(const std::vector<int>& sizes, double eps_user,
                                       unsigned long long seed) {
  std::vector<BenchRow> rows;
  for (int n : sizes) {
    if (n < 2) fail(ErrorKind::BadParams, "benchmark sizes must be at least 2");
    const double p = 8.0 / static_cast<double>(n - 1);  // average degree ~8
    GenResult gen = gen_gnp(n, p < 1.0 ? p : 1.0, seed + static_cast<unsigned long long>(n));
    RunConfig cfg;
    cfg.eps_user = eps_user;
    cfg.seed = seed;
    const RunResult res = improved_mdst(gen.graph, cfg);
    BenchRow row;
    row.n = n;
    row.m = gen.graph.edge_count();
    row.eps = eps_user;
    row.wall_ms = res.stats.wall_ms;
    row.tree_degree = res.delta;
    row.degred_calls = res.stats.degred_calls;
    rows.push_back(row);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,m,eps,wall_ms,tree_degree,degred_calls\n";
  for (const BenchRow& r : rows) {
    out << r.n << ',' << r.m << ',' << r.eps << ',' << r.wall_ms << ',' << r.tree_degree
        << ',' << r.degred_calls << '\n';
  }
  return out.str();
}

}  // namespace mdst
