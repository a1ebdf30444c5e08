#include "mdst/oracle.hpp"

#include <algorithm>
#include <cassert>

#include "mdst/disjoint_sets.hpp"
#include "mdst/errors.hpp"

namespace mdst {

namespace {

int tree_max_degree(const Graph& g, const std::vector<int>& ids) {
  std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
  for (int id : ids) {
    ++deg[static_cast<size_t>(g.edge(id).u)];
    ++deg[static_cast<size_t>(g.edge(id).v)];
  }
  return *std::max_element(deg.begin(), deg.end());
}

struct BranchSearch {
  const Graph& g;
  int n;
  int m;
  int best;  // degree to beat (strictly)
  std::vector<int> best_ids;
  std::vector<int> deg;
  std::vector<int> chosen;

  void run(int idx, const DisjointSets& ds) {
    if (ds.class_count() == 1) {
      // Spanning: chosen holds exactly n-1 edges, all below `best`.
      best = tree_max_degree(g, chosen);
      best_ids = chosen;
      return;
    }
    if (idx == m) return;
    if (m - idx < ds.class_count() - 1) return;  // cannot connect anymore

    const Graph::Edge& e = g.edge(idx);
    // Include, when it joins two components and stays under the incumbent.
    if (!ds.same_set(e.u, e.v) && deg[static_cast<size_t>(e.u)] + 1 < best &&
        deg[static_cast<size_t>(e.v)] + 1 < best) {
      DisjointSets next = ds;
      next.unite(e.u, e.v);
      ++deg[static_cast<size_t>(e.u)];
      ++deg[static_cast<size_t>(e.v)];
      chosen.push_back(idx);
      run(idx + 1, next);
      chosen.pop_back();
      --deg[static_cast<size_t>(e.u)];
      --deg[static_cast<size_t>(e.v)];
    }
    // Exclude.
    run(idx + 1, ds);
  }
};

}  // namespace

ExactResult exact_mdst(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 9) fail(ErrorKind::TooLarge, "exact search accepts at most 9 vertices");
  if (!g.is_connected()) fail(ErrorKind::Disconnected, "graph is not connected");
  if (n == 1) return ExactResult{0, {}};

  const SpanningTree seed = bfs_tree(g);
  ExactResult result;
  result.delta_star = seed.max_degree();
  result.tree_edge_ids = seed.tree_edge_ids();
  if (g.edge_count() == n - 1) return result;  // the graph is its own tree

  BranchSearch search{g, n, g.edge_count(), result.delta_star, result.tree_edge_ids,
                      std::vector<int>(static_cast<size_t>(n), 0), {}};
  search.run(0, DisjointSets(n));
  result.delta_star = search.best;
  result.tree_edge_ids = std::move(search.best_ids);
  std::sort(result.tree_edge_ids.begin(), result.tree_edge_ids.end());
  return result;
}

ExactResult exact_mdst_subsets(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 6) fail(ErrorKind::TooLarge, "subset search accepts at most 6 vertices");
  if (!g.is_connected()) fail(ErrorKind::Disconnected, "graph is not connected");
  if (n == 1) return ExactResult{0, {}};

  const int m = g.edge_count();
  const int need = n - 1;
  std::vector<int> pick(static_cast<size_t>(need), 0);
  ExactResult best;
  best.delta_star = n;  // any tree beats this

  // Lexicographic combinations of `need` edge ids out of m.
  auto evaluate = [&]() {
    DisjointSets ds(n);
    for (int id : pick)
      if (!ds.unite(g.edge(id).u, g.edge(id).v)) return;  // cycle
    if (ds.class_count() != 1) return;
    const int degree = tree_max_degree(g, pick);
    if (degree < best.delta_star) {
      best.delta_star = degree;
      best.tree_edge_ids = pick;
    }
  };
  std::vector<int> idx(static_cast<size_t>(need));
  for (int i = 0; i < need; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    pick = idx;
    evaluate();
    int pos = need - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - need + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int i = pos + 1; i < need; ++i)
      idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
  }
  assert(!best.tree_edge_ids.empty() || n == 1);
  return best;
}

SpanningTree local_search_baseline(const Graph& g) {
  SpanningTree t = bfs_tree(g);
  bool improved = true;
  while (improved) {
    improved = false;
    const int delta = t.max_degree();
    for (int k = delta; k >= 3 && !improved; --k) {
      for (int id = 0; id < g.edge_count() && !improved; ++id) {
        if (t.is_tree_edge(id)) continue;
        const Graph::Edge& e = g.edge(id);
        if (t.degree(e.u) > k - 2 || t.degree(e.v) > k - 2) continue;
        const std::vector<int> path = t.path(e.u, e.v);
        for (size_t pos = 0; pos + 1 < path.size(); ++pos) {
          if (t.degree(path[pos]) < k) continue;
          // Swap out the path edge leaving the overloaded vertex toward v.
          const int rem = g.edge_id(path[pos], path[pos + 1]);
          t.swap_edge(id, rem);
          improved = true;
          break;
        }
      }
    }
  }
  return t;
}

}  // namespace mdst
