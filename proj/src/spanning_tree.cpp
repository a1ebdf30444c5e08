#include "mdst/spanning_tree.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "mdst/disjoint_sets.hpp"

namespace mdst {

SpanningTree::SpanningTree(const Graph& g, const std::vector<int>& tree_edge_ids)
    : g_(&g),
      in_tree_(g.edge_count(), 0),
      adj_(g.vertex_count()),
      slot_u_(g.edge_count(), -1),
      slot_v_(g.edge_count(), -1),
      deg_(g.vertex_count(), 0),
      hist_(g.vertex_count() + 1, 0) {
  int n = g.vertex_count();
  if (static_cast<int>(tree_edge_ids.size()) != (n > 0 ? n - 1 : 0)) {
    fail(ErrorKind::BadParams,
         "spanning tree needs exactly " + std::to_string(n - 1) + " edges, got " +
             std::to_string(tree_edge_ids.size()));
  }
  DisjointSets ds(std::max(n, 1));
  for (int id : tree_edge_ids) {
    if (id < 0 || id >= g.edge_count()) {
      fail(ErrorKind::IdOutOfRange, "edge id " + std::to_string(id));
    }
    if (in_tree_[id]) {
      fail(ErrorKind::DuplicateEdge, "edge id " + std::to_string(id) + " listed twice");
    }
    const Graph::Edge& e = g.edge(id);
    if (!ds.unite(e.u, e.v)) {
      fail(ErrorKind::Disconnected, "tree edges contain a cycle, so they cannot span");
    }
    attach(id);
  }
  for (int u = 0; u < n; ++u) {
    ++hist_[deg_[u]];
    max_deg_ = std::max(max_deg_, deg_[u]);
  }
}

void SpanningTree::attach(int id) {
  const Graph::Edge& e = g_->edge(id);
  in_tree_[id] = 1;
  slot_u_[id] = static_cast<int>(adj_[e.u].size());
  adj_[e.u].push_back(id);
  slot_v_[id] = static_cast<int>(adj_[e.v].size());
  adj_[e.v].push_back(id);
  ++deg_[e.u];
  ++deg_[e.v];
}

void SpanningTree::detach(int id) {
  const Graph::Edge& e = g_->edge(id);
  in_tree_[id] = 0;
  auto remove_at = [this](int vertex, int slot) {
    std::vector<int>& list = adj_[vertex];
    int moved = list.back();
    list[slot] = moved;
    list.pop_back();
    if (slot < static_cast<int>(list.size())) {
      const Graph::Edge& me = g_->edge(moved);
      if (me.u == vertex) {
        slot_u_[moved] = slot;
      } else {
        slot_v_[moved] = slot;
      }
    }
  };
  remove_at(e.u, slot_u_[id]);
  remove_at(e.v, slot_v_[id]);
  slot_u_[id] = -1;
  slot_v_[id] = -1;
  --deg_[e.u];
  --deg_[e.v];
}

void SpanningTree::bump_degree(int u, int delta) {
  --hist_[deg_[u] - delta];  // old degree bucket (deg_ already updated)
  ++hist_[deg_[u]];
  if (delta > 0) {
    max_deg_ = std::max(max_deg_, deg_[u]);
  } else {
    while (max_deg_ > 0 && hist_[max_deg_] == 0) --max_deg_;
  }
}

std::vector<int> SpanningTree::tree_edge_ids() const {
  std::vector<int> out;
  out.reserve(vertex_count() > 0 ? vertex_count() - 1 : 0);
  for (int id = 0; id < static_cast<int>(in_tree_.size()); ++id) {
    if (in_tree_[id]) out.push_back(id);
  }
  return out;
}

int SpanningTree::count_with_degree(int d) const {
  if (d < 0 || d > max_deg_) return 0;
  return hist_[d];
}

int SpanningTree::count_with_degree_at_least(int k) const {
  int total = 0;
  for (int d = std::max(k, 0); d <= max_deg_; ++d) total += hist_[d];
  return total;
}

long long SpanningTree::degree_sum_at_least(int k) const {
  long long total = 0;
  for (int d = std::max(k, 0); d <= max_deg_; ++d) {
    total += static_cast<long long>(d) * hist_[d];
  }
  return total;
}

std::vector<int> SpanningTree::vertices_with_degree_at_least(int k) const {
  std::vector<int> out;
  for (int u = 0; u < vertex_count(); ++u) {
    if (deg_[u] >= k) out.push_back(u);
  }
  return out;
}

std::vector<int> SpanningTree::path(int u, int v) const {
  if (u == v) fail(ErrorKind::SameVertex, "path endpoints coincide at " + std::to_string(u));
  int n = vertex_count();
  std::vector<int> parent(n, -2);
  std::deque<int> queue{u};
  parent[u] = -1;
  while (!queue.empty() && parent[v] == -2) {
    int x = queue.front();
    queue.pop_front();
    for (int id : adj_[x]) {
      int y = g_->other_endpoint(id, x);
      if (parent[y] == -2) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  assert(parent[v] != -2 && "spanning tree must connect all vertices");
  std::vector<int> out;
  for (int x = v; x != -1; x = parent[x]) out.push_back(x);
  std::reverse(out.begin(), out.end());
  return out;
}

void SpanningTree::swap_edge(int add_id, int remove_id) {
  if (add_id < 0 || add_id >= g_->edge_count() || remove_id < 0 ||
      remove_id >= g_->edge_count()) {
    fail(ErrorKind::IdOutOfRange, "edge id out of range");
  }
  if (in_tree_[add_id]) {
    fail(ErrorKind::AlreadyTreeEdge, "edge " + std::to_string(add_id) + " is already in the tree");
  }
  const Graph::Edge& add = g_->edge(add_id);
  if (!in_tree_[remove_id]) {
    fail(ErrorKind::NotOnCycle,
         "edge " + std::to_string(remove_id) + " is not a tree edge, so not on the cycle");
  }
  std::vector<int> cycle = path(add.u, add.v);
  const Graph::Edge& rem = g_->edge(remove_id);
  bool on_cycle = false;
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
    int a = cycle[i], b = cycle[i + 1];
    if ((a == rem.u && b == rem.v) || (a == rem.v && b == rem.u)) {
      on_cycle = true;
      break;
    }
  }
  if (!on_cycle) {
    fail(ErrorKind::NotOnCycle,
         "edge " + std::to_string(remove_id) + " does not lie on the cycle closed by " +
             std::to_string(add_id));
  }
  swap_edge_trusted(add_id, remove_id);
}

void SpanningTree::swap_edge_trusted(int add_id, int remove_id) {
  const Graph::Edge& add = g_->edge(add_id);
  const Graph::Edge& rem = g_->edge(remove_id);
  attach(add_id);
  bump_degree(add.u, +1);
  bump_degree(add.v, +1);
  detach(remove_id);
  bump_degree(rem.u, -1);
  bump_degree(rem.v, -1);
}

SpanningTree bfs_tree(const Graph& g) {
  return SpanningTree(g, bfs_tree_edges(g));
}

}  // namespace mdst
