#pragma once

#include <string>
#include <vector>

#include "mdst/errors.hpp"

namespace mdst {

// Union-find with union by rank and path halving. Tie-break on equal ranks:
// the root of the first argument wins, so the representative structure is a
// deterministic function of the executed union sequence.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), rank_(n, 0), classes_(n) {
    if (n < 1) fail(ErrorKind::BadParams, "universe size must be at least 1");
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int size() const { return static_cast<int>(parent_.size()); }
  int class_count() const { return classes_; }

  // Path halving touches only the internal representation, never the
  // partition itself, so lookups stay const.
  int find(int a) const {
    check(a);
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  // Returns true iff two distinct classes were merged.
  bool unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (rank_[ra] < rank_[rb]) {
      parent_[ra] = rb;
    } else if (rank_[ra] > rank_[rb]) {
      parent_[rb] = ra;
    } else {
      parent_[rb] = ra;
      ++rank_[ra];
    }
    --classes_;
    return true;
  }

  bool same_set(int a, int b) const { return find(a) == find(b); }

 private:
  void check(int a) const {
    if (a < 0 || a >= size()) {
      fail(ErrorKind::IdOutOfRange,
           "element " + std::to_string(a) + " not in [0, " + std::to_string(size()) + ")");
    }
  }

  mutable std::vector<int> parent_;
  std::vector<int> rank_;
  int classes_;
};

}  // namespace mdst
