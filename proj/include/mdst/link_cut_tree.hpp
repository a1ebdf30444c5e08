#pragma once

#include <utility>
#include <vector>

#include "mdst/errors.hpp"

namespace mdst {

// Link-cut tree over n vertices with per-vertex integer weights and a
// path-minimum aggregate. The aggregate is the lexicographic minimum of
// (weight, vertex id), so queries have one well-defined answer independent
// of the internal splay shape: minimum weight, ties broken by smallest id.
//
// Operations (all O(log n) amortized):
//   link(u, v)            join two trees by edge (u, v)
//   cut(u, v)             remove forest edge (u, v)
//   connected(u, v)       same-tree test
//   set_weight(u, w)      overwrite u's weight
//   path_min_vertex(u, v) (vertex, weight) minimizing (weight, id) on the path
//   path_next(u, v)       the neighbor of u on the path from u to v
class LinkCutForest {
 public:
  explicit LinkCutForest(int n);

  int size() const { return static_cast<int>(weight_.size()); }

  void link(int u, int v);
  void cut(int u, int v);
  bool connected(int u, int v);
  void set_weight(int u, int w);
  int weight(int u) const { return weight_[u]; }
  std::pair<int, int> path_min_vertex(int u, int v);
  int path_next(int u, int v);

 private:
  void check(int u) const;
  bool is_splay_root(int x) const;
  void push(int x);
  void pull(int x);
  void apply_flip(int x);
  void rotate(int x);
  void splay(int x);
  void access(int x);
  void make_root(int x);
  int find_root(int x);

  std::vector<int> parent_;
  std::vector<int> child_[2];
  std::vector<char> flip_;
  std::vector<int> weight_;
  // Aggregate over the splay subtree: vertex with the lexicographically
  // smallest (weight, id) on the represented path segment.
  std::vector<int> min_vertex_;
};

}  // namespace mdst
