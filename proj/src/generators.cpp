#include "mdst/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mdst/disjoint_sets.hpp"
#include "mdst/errors.hpp"
#include "mdst/rng.hpp"

namespace mdst {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) fail(ErrorKind::BadParams, msg);
}

GenResult natural(Graph g, std::optional<int> delta_star) {
  return GenResult{std::move(g), delta_star, "natural"};
}

// The optimum for families that contain a Hamiltonian path: 2 once three
// vertices force an internal vertex, else the trivial values.
int ham_optimum(int n) { return n >= 3 ? 2 : (n == 2 ? 1 : 0); }

}  // namespace

GenResult gen_path(int n) {
  require(n >= 1, "path needs at least 1 vertex");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return natural(std::move(g), ham_optimum(n));
}

GenResult gen_cycle(int n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(n - 1, 0);
  return natural(std::move(g), 2);
}

GenResult gen_star(int n) {
  require(n >= 1, "star needs at least 1 vertex");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return natural(std::move(g), n >= 2 ? n - 1 : 0);
}

GenResult gen_complete(int n) {
  require(n >= 1, "complete graph needs at least 1 vertex");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return natural(std::move(g), ham_optimum(n));
}

GenResult gen_hypercube(int dim) {
  require(dim >= 0 && dim <= 20, "hypercube dimension must lie in [0, 20]");
  const int n = 1 << dim;
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < dim; ++b) {
      const int j = i ^ (1 << b);
      if (i < j) g.add_edge(i, j);
    }
  // Gray codes give a Hamiltonian path for dim >= 1.
  return natural(std::move(g), dim >= 2 ? 2 : dim);
}

GenResult gen_wheel(int n) {
  require(n >= 4, "wheel needs at least 4 vertices");
  Graph g(n);
  for (int i = 1; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(n - 1, 1);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  // Rim path with the hub spliced in anywhere is Hamiltonian.
  return natural(std::move(g), 2);
}

GenResult gen_broom(int n, int branches) {
  require(n >= 3, "broom needs at least 3 vertices");
  require(branches >= 1 && branches <= n - 2,
          "broom branch count must lie in [1, n-2]");
  Graph g(n);
  const int handle_end = n - branches - 1;
  for (int i = 0; i + 1 <= handle_end; ++i) g.add_edge(i, i + 1);
  for (int i = handle_end + 1; i < n; ++i) g.add_edge(handle_end, i);
  // The graph is its own unique spanning tree; the junction vertex has the
  // handle edge plus every branch.
  return natural(std::move(g), branches + 1);
}

GenResult gen_ham_path_plus(int n, int extra, unsigned long long seed) {
  require(n >= 2, "hamiltonian path needs at least 2 vertices");
  const long long possible =
      static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
  require(extra >= 0 && extra <= possible,
          "extra edge count exceeds the non-path pairs available");
  Rng rng(seed);
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i >= 1; --i)
    std::swap(perm[static_cast<size_t>(i)],
              perm[static_cast<size_t>(rng.next_below(static_cast<unsigned long long>(i) + 1))]);
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i)
    g.add_edge(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(i + 1)]);
  int added = 0;
  while (added < extra) {
    const int u = static_cast<int>(rng.next_below(static_cast<unsigned long long>(n)));
    const int v = static_cast<int>(rng.next_below(static_cast<unsigned long long>(n)));
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    ++added;
  }
  return natural(std::move(g), ham_optimum(n));
}

GenResult gen_gnp(int n, double p, unsigned long long seed) {
  require(n >= 1, "random graph needs at least 1 vertex");
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
  Rng rng(seed);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_double() < p) g.add_edge(i, j);

  DisjointSets ds(n);
  for (const Graph::Edge& e : g.edges()) ds.unite(e.u, e.v);
  if (ds.class_count() == 1)
    return GenResult{std::move(g), std::nullopt, "natural"};

  // Chain the components together through their smallest vertices.
  std::vector<int> heads;
  std::vector<char> seen_root(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    const int root = ds.find(v);
    if (!seen_root[static_cast<size_t>(root)]) {
      seen_root[static_cast<size_t>(root)] = 1;
      heads.push_back(v);  // ascending scan: v is the component's minimum
    }
  }
  for (size_t i = 0; i + 1 < heads.size(); ++i) g.add_edge(heads[i], heads[i + 1]);
  return GenResult{std::move(g), std::nullopt, "augmented"};
}

}  // namespace mdst
