#include "mdst/naive_forest.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace mdst {

NaiveForest::NaiveForest(int n) : adj_(n), weight_(n, 0) {
  if (n < 0) fail(ErrorKind::BadParams, "vertex count must be nonnegative");
}

void NaiveForest::check(int u) const {
  if (u < 0 || u >= size()) {
    fail(ErrorKind::IdOutOfRange,
         "vertex " + std::to_string(u) + " not in [0, " + std::to_string(size()) + ")");
  }
}

std::vector<int> NaiveForest::find_path(int u, int v) const {
  std::vector<int> parent(size(), -2);
  std::deque<int> queue{u};
  parent[u] = -1;
  while (!queue.empty() && parent[v] == -2) {
    int x = queue.front();
    queue.pop_front();
    for (int y : adj_[x]) {
      if (parent[y] == -2) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> out;
  if (parent[v] == -2) return out;
  for (int x = v; x != -1; x = parent[x]) out.push_back(x);
  std::reverse(out.begin(), out.end());
  return out;
}

bool NaiveForest::connected(int u, int v) {
  check(u);
  check(v);
  if (u == v) return true;
  return !find_path(u, v).empty();
}

void NaiveForest::link(int u, int v) {
  check(u);
  check(v);
  if (connected(u, v)) {
    fail(ErrorKind::WouldCreateCycle,
         "vertices " + std::to_string(u) + " and " + std::to_string(v) +
             " are already in the same tree");
  }
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void NaiveForest::cut(int u, int v) {
  check(u);
  check(v);
  if (u == v || adj_[u].count(v) == 0) {
    fail(ErrorKind::NotAForestEdge,
         "{" + std::to_string(u) + ", " + std::to_string(v) + "} is not a forest edge");
  }
  adj_[u].erase(v);
  adj_[v].erase(u);
}

void NaiveForest::set_weight(int u, int w) {
  check(u);
  weight_[u] = w;
}

std::pair<int, int> NaiveForest::path_min_vertex(int u, int v) {
  check(u);
  check(v);
  std::vector<int> path = u == v ? std::vector<int>{u} : find_path(u, v);
  if (path.empty()) {
    fail(ErrorKind::NotConnected,
         "vertices " + std::to_string(u) + " and " + std::to_string(v) +
             " are in different trees");
  }
  int best = path[0];
  for (int x : path) {
    if (weight_[x] < weight_[best] || (weight_[x] == weight_[best] && x < best)) {
      best = x;
    }
  }
  return {best, weight_[best]};
}

int NaiveForest::path_next(int u, int v) {
  check(u);
  check(v);
  if (u == v) fail(ErrorKind::SameVertex, "path endpoints coincide at " + std::to_string(u));
  std::vector<int> path = find_path(u, v);
  if (path.empty()) {
    fail(ErrorKind::NotConnected,
         "vertices " + std::to_string(u) + " and " + std::to_string(v) +
             " are in different trees");
  }
  return path[1];
}

}  // namespace mdst
