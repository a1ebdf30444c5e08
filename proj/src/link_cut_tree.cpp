#include "mdst/link_cut_tree.hpp"

#include <cassert>
#include <string>

namespace mdst {

namespace {
constexpr int kNil = -1;
}

LinkCutForest::LinkCutForest(int n)
    : parent_(n, kNil), flip_(n, 0), weight_(n, 0), min_vertex_(n) {
  if (n < 0) fail(ErrorKind::BadParams, "vertex count must be nonnegative");
  child_[0].assign(n, kNil);
  child_[1].assign(n, kNil);
  for (int i = 0; i < n; ++i) min_vertex_[i] = i;
}

void LinkCutForest::check(int u) const {
  if (u < 0 || u >= size()) {
    fail(ErrorKind::IdOutOfRange,
         "vertex " + std::to_string(u) + " not in [0, " + std::to_string(size()) + ")");
  }
}

bool LinkCutForest::is_splay_root(int x) const {
  int p = parent_[x];
  return p == kNil || (child_[0][p] != x && child_[1][p] != x);
}

void LinkCutForest::apply_flip(int x) {
  std::swap(child_[0][x], child_[1][x]);
  flip_[x] ^= 1;
}

void LinkCutForest::push(int x) {
  if (flip_[x]) {
    if (child_[0][x] != kNil) apply_flip(child_[0][x]);
    if (child_[1][x] != kNil) apply_flip(child_[1][x]);
    flip_[x] = 0;
  }
}

void LinkCutForest::pull(int x) {
  int best = x;
  for (int side = 0; side < 2; ++side) {
    int c = child_[side][x];
    if (c == kNil) continue;
    int cand = min_vertex_[c];
    if (weight_[cand] < weight_[best] ||
        (weight_[cand] == weight_[best] && cand < best)) {
      best = cand;
    }
  }
  min_vertex_[x] = best;
}

void LinkCutForest::rotate(int x) {
  int p = parent_[x];
  int g = parent_[p];
  int side = child_[1][p] == x ? 1 : 0;
  int carried = child_[side ^ 1][x];
  if (!is_splay_root(p)) {
    child_[child_[1][g] == p ? 1 : 0][g] = x;
  }
  parent_[x] = g;
  child_[side][p] = carried;
  if (carried != kNil) parent_[carried] = p;
  child_[side ^ 1][x] = p;
  parent_[p] = x;
  pull(p);
  pull(x);
}

void LinkCutForest::splay(int x) {
  // Push pending flips from the splay root down to x before rotating.
  static thread_local std::vector<int> stack;
  stack.clear();
  int y = x;
  stack.push_back(y);
  while (!is_splay_root(y)) {
    y = parent_[y];
    stack.push_back(y);
  }
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) push(*it);
  while (!is_splay_root(x)) {
    int p = parent_[x];
    if (!is_splay_root(p)) {
      int g = parent_[p];
      bool zig_zig = (child_[1][g] == p) == (child_[1][p] == x);
      rotate(zig_zig ? p : x);
    }
    rotate(x);
  }
}

void LinkCutForest::access(int x) {
  int last = kNil;
  for (int y = x; y != kNil; y = parent_[y]) {
    splay(y);
    child_[1][y] = last;
    pull(y);
    last = y;
  }
  splay(x);
}

void LinkCutForest::make_root(int x) {
  access(x);
  apply_flip(x);
}

int LinkCutForest::find_root(int x) {
  access(x);
  while (true) {
    push(x);
    if (child_[0][x] == kNil) break;
    x = child_[0][x];
  }
  splay(x);
  return x;
}

bool LinkCutForest::connected(int u, int v) {
  check(u);
  check(v);
  if (u == v) return true;
  return find_root(u) == find_root(v);
}

void LinkCutForest::link(int u, int v) {
  check(u);
  check(v);
  if (connected(u, v)) {
    fail(ErrorKind::WouldCreateCycle,
         "vertices " + std::to_string(u) + " and " + std::to_string(v) +
             " are already in the same tree");
  }
  make_root(u);
  parent_[u] = v;
}

void LinkCutForest::cut(int u, int v) {
  check(u);
  check(v);
  if (u == v || !connected(u, v)) {
    fail(ErrorKind::NotAForestEdge,
         "{" + std::to_string(u) + ", " + std::to_string(v) + "} is not a forest edge");
  }
  make_root(u);
  access(v);
  // After make_root(u) + access(v), v's splay tree holds the u..v path in
  // depth order. (u, v) is an edge iff u is v's direct predecessor with no
  // vertex in between: u is v's left child and u has no right child.
  if (child_[0][v] != u || child_[1][u] != kNil) {
    fail(ErrorKind::NotAForestEdge,
         "{" + std::to_string(u) + ", " + std::to_string(v) + "} is not a forest edge");
  }
  child_[0][v] = kNil;
  parent_[u] = kNil;
  pull(v);
}

void LinkCutForest::set_weight(int u, int w) {
  check(u);
  access(u);
  weight_[u] = w;
  pull(u);
}

std::pair<int, int> LinkCutForest::path_min_vertex(int u, int v) {
  check(u);
  check(v);
  if (u != v && !connected(u, v)) {
    fail(ErrorKind::NotConnected,
         "vertices " + std::to_string(u) + " and " + std::to_string(v) +
             " are in different trees");
  }
  make_root(u);
  access(v);
  int best = min_vertex_[v];
  return {best, weight_[best]};
}

int LinkCutForest::path_next(int u, int v) {
  check(u);
  check(v);
  if (u == v) fail(ErrorKind::SameVertex, "path endpoints coincide at " + std::to_string(u));
  if (!connected(u, v)) {
    fail(ErrorKind::NotConnected,
         "vertices " + std::to_string(u) + " and " + std::to_string(v) +
             " are in different trees");
  }
  // Root at v, access u: u's in-order predecessor is the path neighbor of u
  // on the v side.
  make_root(v);
  access(u);
  int x = child_[0][u];
  assert(x != kNil && "u and v are distinct and connected, so the path has >= 2 vertices");
  push(x);
  while (child_[1][x] != kNil) {
    x = child_[1][x];
    push(x);
  }
  splay(x);
  return x;
}

}  // namespace mdst
