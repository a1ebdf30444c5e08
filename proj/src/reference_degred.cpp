#include "mdst/reference_degred.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "mdst/errors.hpp"
#include "mdst/graph.hpp"

namespace mdst {
namespace {

struct RefState {
  int k = 0;
  double eps = 0.0;
  int h = 0;
  int h_max = 0;
  bool terminal = false;
  std::vector<std::vector<int>> layers;
  std::vector<int> layer_of;
  std::vector<char> marked;
  std::vector<char> dead;  // B_0 members whose degree fell below k
  std::vector<char> tagged;
  std::vector<int> cursor;
  std::vector<std::vector<int>> labels;  // component label per vertex, per round
  int built = -1;

  const std::vector<int>& label(int round) const {
    return labels[static_cast<size_t>(std::min(round, built))];
  }
  int weight_of(int v) const {
    if (tagged[static_cast<size_t>(v)] || dead[static_cast<size_t>(v)])
      return h + 1;
    const int layer = layer_of[static_cast<size_t>(v)];
    return layer == kNoLayer ? h + 1 : layer;
  }
};

// Component label per vertex of the tree minus layers 0..round; -1 when the
// vertex itself was removed.
std::vector<int> component_labels(const SpanningTree& t, const std::vector<int>& layer_of,
                                  int round) {
  const int n = t.vertex_count();
  std::vector<int> label(static_cast<size_t>(n), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (layer_of[static_cast<size_t>(s)] <= round || label[static_cast<size_t>(s)] != -1)
      continue;
    label[static_cast<size_t>(s)] = next;
    stack.assign(1, s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int id : t.adjacency(u)) {
        const int v = t.graph().other_endpoint(id, u);
        if (layer_of[static_cast<size_t>(v)] > round && label[static_cast<size_t>(v)] == -1) {
          label[static_cast<size_t>(v)] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return label;
}

RefState ref_layering(const SpanningTree& t, int k, double eps, std::vector<char> marked) {
  const Graph& g = t.graph();
  const int n = t.vertex_count();
  RefState st;
  st.k = k;
  st.eps = eps;
  st.h_max = layer_cap(n, eps);
  st.layer_of.assign(static_cast<size_t>(n), kNoLayer);
  st.marked = std::move(marked);
  st.dead.assign(static_cast<size_t>(n), 0);
  st.tagged.assign(static_cast<size_t>(n), 0);
  st.cursor.assign(static_cast<size_t>(n), 0);

  std::vector<int> b0 = t.vertices_with_degree_at_least(k);
  if (b0.empty())
    fail(ErrorKind::EmptySk, "no vertex has degree at least " + std::to_string(k));
  for (int v : b0) st.layer_of[static_cast<size_t>(v)] = 0;
  st.layers.push_back(std::move(b0));

  int h = 0;
  while (true) {
    st.labels.push_back(component_labels(t, st.layer_of, h));
    st.built = h;
    const std::vector<int>& lab = st.labels.back();

    if (h >= st.h_max) {
      st.h = h;
      st.terminal = true;
      return st;
    }

    bool cross = false;
    for (int id = 0; id < g.edge_count() && !cross; ++id) {
      const Graph::Edge& e = g.edge(id);
      cross = !st.marked[static_cast<size_t>(e.u)] && !st.marked[static_cast<size_t>(e.v)] &&
              st.layer_of[static_cast<size_t>(e.u)] == kNoLayer &&
              st.layer_of[static_cast<size_t>(e.v)] == kNoLayer &&
              lab[static_cast<size_t>(e.u)] != lab[static_cast<size_t>(e.v)];
    }
    if (cross) {
      st.h = h;
      st.terminal = false;
      return st;
    }

    std::vector<char> next(static_cast<size_t>(n), 0);
    for (int id = 0; id < g.edge_count(); ++id) {
      const Graph::Edge& e = g.edge(id);
      for (int side = 0; side < 2; ++side) {
        const int u = side ? e.v : e.u;
        const int v = side ? e.u : e.v;
        if (st.marked[static_cast<size_t>(u)] && !st.marked[static_cast<size_t>(v)] &&
            st.layer_of[static_cast<size_t>(u)] == kNoLayer &&
            st.layer_of[static_cast<size_t>(v)] == kNoLayer &&
            lab[static_cast<size_t>(u)] != lab[static_cast<size_t>(v)])
          next[static_cast<size_t>(u)] = 1;
      }
    }
    std::vector<int> bh;
    for (int v = 0; v < n; ++v)
      if (next[static_cast<size_t>(v)]) bh.push_back(v);
    if (bh.empty()) {
      st.h = st.h_max;
      st.terminal = true;
      return st;
    }
    ++h;
    for (int v : bh) st.layer_of[static_cast<size_t>(v)] = h;
    st.layers.push_back(std::move(bh));
  }
}

// Minimum (weight, id) vertex over the tree path between two distinct
// vertices, mirroring the dynamic forest's aggregate.
std::pair<int, int> ref_path_min(const RefState& st, const SpanningTree& t, int a, int b) {
  int best_v = -1;
  int best_w = std::numeric_limits<int>::max();
  for (int v : t.path(a, b)) {
    const int wv = st.weight_of(v);
    if (wv < best_w || (wv == best_w && v < best_v)) {
      best_w = wv;
      best_v = v;
    }
  }
  return {best_v, best_w};
}

bool ref_dfs(RefState& st, const SpanningTree& t, int level, int edge_id, int w_end,
             int z_end, std::vector<SeqEdge>& out) {
  if (level == 1) {
    out.push_back(SeqEdge{edge_id, w_end, z_end});
    return true;
  }
  const Graph& g = t.graph();
  while (true) {
    const auto [w, weight] = ref_path_min(st, t, w_end, z_end);
    assert(weight >= level - 1);
    if (weight != level - 1) return false;

    const auto& inc = g.incident(w);
    while (st.cursor[static_cast<size_t>(w)] < static_cast<int>(inc.size())) {
      const int aid = inc[static_cast<size_t>(st.cursor[static_cast<size_t>(w)]++)];
      const int z = g.other_endpoint(aid, w);
      if (st.marked[static_cast<size_t>(z)] || st.layer_of[static_cast<size_t>(z)] != kNoLayer)
        continue;
      const std::vector<int>& lab = st.label(level - 2);
      if (lab[static_cast<size_t>(w)] == lab[static_cast<size_t>(z)]) continue;
      if (level == 2 && ref_path_min(st, t, w, z).second != 0) continue;
      if (ref_dfs(st, t, level - 1, aid, w, z, out)) {
        out.push_back(SeqEdge{edge_id, w_end, z_end});
        return true;
      }
    }
    st.tagged[static_cast<size_t>(w)] = 1;
  }
}

std::optional<AugmentingSequence> ref_search(RefState& st, const SpanningTree& t,
                                             int edge_id, long long* anchor_skips) {
  const Graph::Edge& e = t.graph().edge(edge_id);
  std::vector<SeqEdge> edges;
  if (!ref_dfs(st, t, st.h + 1, edge_id, e.u, e.v, edges)) return std::nullopt;
  const auto [anchor, weight] = ref_path_min(st, t, edges[0].w, edges[0].z);
  if (weight != 0) {
    ++*anchor_skips;
    assert(st.h == 0);
    return std::nullopt;
  }
  AugmentingSequence seq;
  seq.edges = std::move(edges);
  seq.anchor = anchor;
  return seq;
}

// Applies the sequence with checked swaps, then refreshes every round's
// component labels from scratch.
std::vector<int> ref_apply(RefState& st, SpanningTree& t, const AugmentingSequence& seq) {
  const Graph& g = t.graph();
  const int k = st.k;
  std::vector<int> newly_marked;
  for (int i = static_cast<int>(seq.edges.size()) - 1; i >= 0; --i) {
    const SeqEdge& top = seq.edges[static_cast<size_t>(i)];
    const int w_low = (i == 0) ? seq.anchor : seq.edges[static_cast<size_t>(i - 1)].w;
    const std::vector<int> path = t.path(w_low, top.z);
    const int x = path[1];
    const int rem_id = g.edge_id(w_low, x);
    if (rem_id < 0) fail(ErrorKind::InvalidSequence, "tree edge to remove not found");
    t.swap_edge(top.edge_id, rem_id);

    int verts[4];
    int net[4];
    int cnt = 0;
    auto accumulate = [&](int v, int d) {
      for (int a = 0; a < cnt; ++a)
        if (verts[a] == v) {
          net[a] += d;
          return;
        }
      verts[cnt] = v;
      net[cnt] = d;
      ++cnt;
    };
    accumulate(top.w, +1);
    accumulate(top.z, +1);
    accumulate(w_low, -1);
    accumulate(x, -1);
    for (int a = 0; a < cnt; ++a) {
      if (net[a] == 0) continue;
      const int v = verts[a];
      const int now = t.degree(v);
      const int before = now - net[a];
      if (now == k - 1 && before != k - 1 && !st.marked[static_cast<size_t>(v)]) {
        st.marked[static_cast<size_t>(v)] = 1;
        newly_marked.push_back(v);
      }
      if (st.layer_of[static_cast<size_t>(v)] == 0 && before >= k && now < k)
        st.dead[static_cast<size_t>(v)] = 1;
    }
  }
  for (int i = 0; i <= st.built; ++i)
    st.labels[static_cast<size_t>(i)] = component_labels(t, st.layer_of, i);
  return newly_marked;
}

}  // namespace

DegRedReport reference_degred(SpanningTree& t, int k, double eps) {
  if (k < 3)
    fail(ErrorKind::ThresholdTooSmall, "degree-reduction threshold must be at least 3");
  const Graph& g = t.graph();
  const int n = t.vertex_count();

  DegRedReport rep;
  rep.k = k;
  rep.d_before = t.degree_sum_at_least(k);
  rep.sk_before = t.count_with_degree_at_least(k);
  if (rep.sk_before == 0)
    fail(ErrorKind::EmptySk, "S_" + std::to_string(k) + " is empty at entry");

  std::vector<char> marked(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    if (t.degree(v) == k - 1) marked[static_cast<size_t>(v)] = 1;

  RefState st;
  int prev_h = -1;
  while (true) {
    st = ref_layering(t, k, eps, std::move(marked));
    rep.h_trajectory.push_back(st.h);
    assert(st.h > prev_h);
    prev_h = st.h;

    long long live_dk = t.degree_sum_at_least(k);
    for (int id = 0; id < g.edge_count(); ++id) {
      if (live_dk == 0) break;
      const Graph::Edge& e = g.edge(id);
      if (st.marked[static_cast<size_t>(e.u)] || st.marked[static_cast<size_t>(e.v)]) continue;
      if (st.layer_of[static_cast<size_t>(e.u)] != kNoLayer ||
          st.layer_of[static_cast<size_t>(e.v)] != kNoLayer)
        continue;
      const std::vector<int>& lab = st.label(st.h);
      if (lab[static_cast<size_t>(e.u)] == lab[static_cast<size_t>(e.v)]) continue;

      auto seq = ref_search(st, t, id, &rep.anchor_skips);
      if (!seq) continue;
      const std::vector<int> newly = ref_apply(st, t, *seq);
      ++rep.modifications;
      rep.marked_growth += static_cast<long long>(newly.size());
      live_dk = t.degree_sum_at_least(k);
      rep.dk_trajectory.push_back(live_dk);
    }

    if (st.terminal) {
      rep.reached_terminal = true;
      break;
    }
    if (t.count_with_degree_at_least(k) == 0) {
      rep.reached_terminal = false;
      break;
    }
    marked = std::move(st.marked);
  }

  rep.d_after = t.degree_sum_at_least(k);
  rep.sk_after = t.count_with_degree_at_least(k);
  rep.final_state.k = st.k;
  rep.final_state.eps = st.eps;
  rep.final_state.h = st.h;
  rep.final_state.h_max = st.h_max;
  rep.final_state.terminal = st.terminal;
  rep.final_state.layers = std::move(st.layers);
  rep.final_state.layer_of = std::move(st.layer_of);
  rep.final_state.marked = std::move(st.marked);
  rep.final_state.anchor_dead = std::move(st.dead);
  rep.final_state.tagged = std::move(st.tagged);
  rep.final_state.arc_cursor = std::move(st.cursor);
  return rep;
}

}  // namespace mdst
