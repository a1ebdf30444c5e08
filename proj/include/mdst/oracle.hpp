#pragma once

#include <vector>

#include "mdst/graph.hpp"
#include "mdst/spanning_tree.hpp"

namespace mdst {

struct ExactResult {
  int delta_star = 0;
  std::vector<int> tree_edge_ids;  // a witness tree attaining delta_star
};

// Exact minimum maximum spanning-tree degree by include/exclude branching
// over the edge list, pruning on the incumbent degree and on connectivity
// counts. Accepts up to 9 vertices (TooLarge beyond); the graph must be
// connected (Disconnected). Deterministic: the witness is the first optimal
// tree in branching order.
ExactResult exact_mdst(const Graph& g);

// Independent exact method for cross-checking: tries every (n-1)-edge
// subset in lexicographic order. Accepts up to 6 vertices.
ExactResult exact_mdst_subsets(const Graph& g);

// Hill-climbing baseline: starting from the breadth-first tree, repeatedly
// swaps in a non-tree edge whose endpoints both have degree at most k-2
// when the path between them contains a vertex of degree at least k,
// scanning k downward from the current maximum. Deterministic.
SpanningTree local_search_baseline(const Graph& g);

}  // namespace mdst
