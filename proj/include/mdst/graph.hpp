#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mdst/errors.hpp"

namespace mdst {

// Simple undirected graph. Vertices are 0..n-1; edges carry the id of their
// insertion order, and adjacency lists preserve insertion order. Both facts
// are load-bearing: every scan in the solver iterates edges by ascending id
// so results are reproducible.
class Graph {
 public:
  struct Edge {
    int u;
    int v;
  };

  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Adds edge {u, v}; returns its id. Rejects self-loops and duplicates.
  int add_edge(int u, int v);

  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Ids of edges incident to u, in insertion order.
  const std::vector<int>& incident(int u) const { return incident_[u]; }

  int degree(int u) const { return static_cast<int>(incident_[u].size()); }

  // The endpoint of edge `id` that is not `u`.
  int other_endpoint(int id, int u) const {
    const Edge& e = edges_[id];
    return e.u == u ? e.v : e.u;
  }

  bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

  // Id of edge {u, v}, or -1 if absent. O(1) expected.
  int edge_id(int u, int v) const;

  bool is_connected() const;

 private:
  void check_vertex(int u) const;
  long long pair_key(int u, int v) const;

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::unordered_map<long long, int> edge_ids_;
};

// Parses a graph from text. Two formats are auto-detected:
//  - DIMACS: comment lines `c ...`, one header `p edge <n> <m>`, then exactly
//    m lines `e <u> <v>` with 1-based vertex ids.
//  - bare edge list: lines `<u> <v>` with 0-based ids; n is one more than the
//    largest id mentioned.
// Errors name the offending line number.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph parse_graph_file(const std::string& path);

// Serializes in bare edge-list format, one `u v` line per edge in id order.
std::string format_edge_list(const Graph& g);

// Serializes in DIMACS format (header + 1-based `e u v` lines). Unlike the
// bare format this round-trips graphs whose vertex count exceeds the largest
// id mentioned on an edge.
std::string format_dimacs(const Graph& g);

// Breadth-first spanning tree rooted at vertex 0: returns the n-1 graph edge
// ids in BFS discovery order. Throws Disconnected if the graph is not
// connected. Neighbors are explored in adjacency (= insertion) order.
std::vector<int> bfs_tree_edges(const Graph& g);

}  // namespace mdst
