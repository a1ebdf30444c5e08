#pragma once

#include <set>
#include <utility>
#include <vector>

#include "mdst/errors.hpp"

namespace mdst {

// Reference twin of LinkCutForest: stores the forest as explicit adjacency
// sets and answers every query by breadth-first scan. Same operations, same
// error contracts, same deterministic tie-break (minimum weight, then
// smallest vertex id). Exists purely as a differential-testing oracle.
class NaiveForest {
 public:
  explicit NaiveForest(int n);

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
  // Path from u to v as a vertex sequence; empty when not connected.
  std::vector<int> find_path(int u, int v) const;

  std::vector<std::set<int>> adj_;
  std::vector<int> weight_;
};

}  // namespace mdst
