#pragma once

#include <string>
#include <vector>

namespace mdst {

struct BenchRow {
  int n = 0;
  long long m = 0;
  double eps = 0.0;
  long long wall_ms = 0;
  int tree_degree = 0;
  long long degred_calls = 0;
};

// Runs the solver on a ladder of sparse random graphs (average degree 8,
// connected by augmentation when needed) and reports one row per size.
// Single-threaded and fully seeded.
std::vector<BenchRow> run_bench_ladder(const std::vector<int>& sizes, double eps_user,
                                       unsigned long long seed);

// CSV with header n,m,eps,wall_ms,tree_degree,degred_calls.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace mdst
