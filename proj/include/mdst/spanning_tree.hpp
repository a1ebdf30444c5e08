#pragma once

#include <vector>

#include "mdst/graph.hpp"

namespace mdst {

// Mutable spanning tree over a fixed Graph. Maintains per-vertex tree degree,
// a degree histogram, and the live maximum degree, so the derived statistics
// N_k (vertices of degree exactly k), S_k (degree >= k) and
// d_k = sum of degrees over S_k are cheap queries. swap_edge updates all of
// this in O(1) amortized per endpoint.
class SpanningTree {
 public:
  SpanningTree(const Graph& g, const std::vector<int>& tree_edge_ids);

  const Graph& graph() const { return *g_; }
  int vertex_count() const { return static_cast<int>(deg_.size()); }

  bool is_tree_edge(int edge_id) const { return in_tree_[edge_id] != 0; }

  // All tree edge ids, ascending. O(m).
  std::vector<int> tree_edge_ids() const;

  // Tree edge ids incident to u. Order reflects mutation history, which is
  // deterministic for a deterministic operation sequence.
  const std::vector<int>& adjacency(int u) const { return adj_[u]; }

  int degree(int u) const { return deg_[u]; }
  int max_degree() const { return max_deg_; }

  int count_with_degree(int d) const;
  int count_with_degree_at_least(int k) const;           // |S_k|
  long long degree_sum_at_least(int k) const;            // d_k

  // Vertices with tree degree >= k, ascending ids. O(n).
  std::vector<int> vertices_with_degree_at_least(int k) const;

  // Vertex sequence of the unique tree path from u to v, endpoints included.
  // Naive O(n) breadth-first walk; hot paths use the dynamic forest instead.
  std::vector<int> path(int u, int v) const;

  // Checked swap: `add_id` must be a non-tree edge and `remove_id` a tree
  // edge on the cycle that `add_id` closes. O(n) due to the cycle check.
  void swap_edge(int add_id, int remove_id);

  // Unchecked O(1) swap for the hot path; caller guarantees the contract.
  void swap_edge_trusted(int add_id, int remove_id);

 private:
  void attach(int id);
  void detach(int id);
  void bump_degree(int u, int delta);

  const Graph* g_;
  std::vector<char> in_tree_;
  std::vector<std::vector<int>> adj_;
  // Position of edge id inside adj_ of each of its two endpoints (by the
  // graph edge's stored u/v orientation); keeps detach O(1).
  std::vector<int> slot_u_;
  std::vector<int> slot_v_;
  std::vector<int> deg_;
  std::vector<int> hist_;
  int max_deg_ = 0;
};

// Builds the spanning tree produced by breadth-first search from vertex 0.
SpanningTree bfs_tree(const Graph& g);

}  // namespace mdst
