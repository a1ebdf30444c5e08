#include "mdst/augment.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "mdst/errors.hpp"
#include "mdst/graph.hpp"

namespace mdst {

int layer_cap(int n, double eps) {
  if (n <= 1) return 1;
  const double rounds = 1.0 + std::log(static_cast<double>(n)) / std::log1p(eps);
  return std::max(1, static_cast<int>(std::ceil(rounds)));
}

DisjointSets& LayeringState::components(int i) {
  assert(!comps.empty() && i >= 0);
  return comps[static_cast<size_t>(std::min(i, last_built))];
}

const DisjointSets& LayeringState::components(int i) const {
  assert(!comps.empty() && i >= 0);
  return comps[static_cast<size_t>(std::min(i, last_built))];
}

std::vector<int> LayeringState::layer_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(layers.size());
  for (const auto& layer : layers) sizes.push_back(static_cast<int>(layer.size()));
  return sizes;
}

LayeringState build_layering(const SpanningTree& t, int k, double eps,
                             std::vector<char> marked) {
  if (k < 2) fail(ErrorKind::ThresholdTooSmall, "degree threshold must be at least 2");
  const Graph& g = t.graph();
  const int n = t.vertex_count();
  if (static_cast<int>(marked.size()) != n)
    fail(ErrorKind::BadParams, "marked vector size does not match the vertex count");

  LayeringState st;
  st.k = k;
  st.eps = eps;
  st.h_max = layer_cap(n, eps);
  st.layer_of.assign(n, kNoLayer);
  st.marked = std::move(marked);
  st.anchor_dead.assign(n, 0);
  st.tagged.assign(n, 0);
  st.arc_cursor.assign(n, 0);

  std::vector<int> b0 = t.vertices_with_degree_at_least(k);
  if (b0.empty())
    fail(ErrorKind::EmptySk, "no vertex has degree at least " + std::to_string(k));
  for (int v : b0) st.layer_of[v] = 0;
  st.layers.push_back(std::move(b0));

  const std::vector<int> tree_ids = t.tree_edge_ids();
  int h = 0;
  while (true) {
    // Components of the tree minus B_0..B_h; removed vertices stay singletons.
    DisjointSets ds(n);
    for (int id : tree_ids) {
      const Graph::Edge& e = g.edge(id);
      if (st.layer_of[e.u] == kNoLayer && st.layer_of[e.v] == kNoLayer) ds.unite(e.u, e.v);
    }
    st.comps.push_back(std::move(ds));
    st.last_built = h;
    const DisjointSets& ch = st.comps.back();

    if (h >= st.h_max) {  // ran to the cap with no cross edge
      st.h = h;
      st.terminal = true;
      return st;
    }

    // Does an edge join unmarked, unlayered vertices in distinct components?
    bool cross = false;
    for (int id = 0; id < g.edge_count() && !cross; ++id) {
      const Graph::Edge& e = g.edge(id);
      cross = !st.marked[e.u] && !st.marked[e.v] && st.layer_of[e.u] == kNoLayer &&
              st.layer_of[e.v] == kNoLayer && !ch.same_set(e.u, e.v);
    }
    if (cross) {
      st.h = h;
      st.terminal = false;
      return st;
    }

    // B_{h+1}: marked, unlayered vertices adjacent to an unmarked, unlayered
    // vertex in a different component.
    std::vector<char> next(n, 0);
    for (int id = 0; id < g.edge_count(); ++id) {
      const Graph::Edge& e = g.edge(id);
      for (int side = 0; side < 2; ++side) {
        const int u = side ? e.v : e.u;
        const int v = side ? e.u : e.v;
        if (st.marked[u] && !st.marked[v] && st.layer_of[u] == kNoLayer &&
            st.layer_of[v] == kNoLayer && !ch.same_set(u, v))
          next[u] = 1;
      }
    }
    std::vector<int> bh;
    for (int v = 0; v < n; ++v)
      if (next[v]) bh.push_back(v);
    if (bh.empty()) {
      // No layer can ever grow again, so every remaining round would look
      // identical; jump straight to the cap.
      st.h = st.h_max;
      st.terminal = true;
      return st;
    }
    ++h;
    for (int v : bh) st.layer_of[v] = h;
    st.layers.push_back(std::move(bh));
  }
}

void assign_forest_weights(const LayeringState& st, LinkCutForest& forest) {
  const int n = static_cast<int>(st.layer_of.size());
  for (int v = 0; v < n; ++v) {
    const int layer = st.layer_of[v];
    forest.set_weight(v, layer == kNoLayer ? st.h + 1 : layer);
  }
}

bool aug_dfs_level(LayeringState& st, const SpanningTree& t, LinkCutForest& forest,
                   int level, int edge_id, int w_end, int z_end,
                   std::vector<SeqEdge>& out) {
  if (level == 1) {
    out.push_back(SeqEdge{edge_id, w_end, z_end});
    return true;
  }
  const Graph& g = t.graph();
  while (true) {
    const auto [w, weight] = forest.path_min_vertex(w_end, z_end);
    assert(weight >= level - 1);
    if (weight != level - 1) return false;  // no untagged candidate remains

    const auto& inc = g.incident(w);
    while (st.arc_cursor[w] < static_cast<int>(inc.size())) {
      const int aid = inc[static_cast<size_t>(st.arc_cursor[w]++)];
      const int z = g.other_endpoint(aid, w);
      if (st.marked[z] || st.layer_of[z] != kNoLayer) continue;
      if (st.components(level - 2).same_set(w, z)) continue;
      // Descending to the bottom commits to the sequence, so make sure a
      // live anchor still exists on the level-1 path before doing so.
      if (level == 2 && forest.path_min_vertex(w, z).second != 0) continue;
      if (aug_dfs_level(st, t, forest, level - 1, aid, w, z, out)) {
        out.push_back(SeqEdge{edge_id, w_end, z_end});
        return true;
      }
    }
    st.tagged[w] = 1;
    forest.set_weight(w, st.h + 1);
  }
}

std::optional<AugmentingSequence> aug_dfs(LayeringState& st, const SpanningTree& t,
                                          LinkCutForest& forest, int edge_id,
                                          long long* anchor_skips) {
  const Graph::Edge& e = t.graph().edge(edge_id);
  std::vector<SeqEdge> edges;
  if (!aug_dfs_level(st, t, forest, st.h + 1, edge_id, e.u, e.v, edges))
    return std::nullopt;
  const auto [anchor, weight] = forest.path_min_vertex(edges[0].w, edges[0].z);
  if (weight != 0) {
    ++*anchor_skips;
    assert(st.h == 0);  // deeper searches pre-checked liveness at level 2
    return std::nullopt;
  }
  AugmentingSequence seq;
  seq.edges = std::move(edges);
  seq.anchor = anchor;
  return seq;
}

ValidationResult validate_sequence(const SpanningTree& t, int k,
                                   const std::vector<char>& marked,
                                   const AugmentingSequence& seq) {
  auto bad = [](std::string msg) { return ValidationResult{false, std::move(msg)}; };
  const Graph& g = t.graph();
  const int l = static_cast<int>(seq.edges.size());
  if (l == 0) return bad("sequence is empty");
  if (seq.anchor < 0 || seq.anchor >= g.vertex_count()) return bad("anchor out of range");

  std::vector<int> ends{seq.anchor};
  for (const SeqEdge& e : seq.edges) {
    if (e.edge_id < 0 || e.edge_id >= g.edge_count()) return bad("edge id out of range");
    const Graph::Edge& ge = g.edge(e.edge_id);
    if (!((ge.u == e.w && ge.v == e.z) || (ge.u == e.z && ge.v == e.w)))
      return bad("sequence endpoints do not match the edge id");
    if (t.is_tree_edge(e.edge_id)) return bad("sequence edge is a tree edge");
    ends.push_back(e.w);
    ends.push_back(e.z);
  }
  std::vector<int> sorted = ends;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return bad("sequence vertices are not pairwise distinct");

  if (t.degree(seq.anchor) < k) return bad("anchor degree below threshold");
  for (const SeqEdge& e : seq.edges)
    if (marked[static_cast<size_t>(e.z)]) return bad("z endpoint is marked");
  for (int i = 0; i + 1 < l; ++i)
    if (!marked[static_cast<size_t>(seq.edges[static_cast<size_t>(i)].w)])
      return bad("interior w endpoint is unmarked");
  if (marked[static_cast<size_t>(seq.edges[static_cast<size_t>(l - 1)].w)])
    return bad("final w endpoint is marked");

  std::vector<std::vector<int>> paths;
  paths.reserve(static_cast<size_t>(l));
  for (const SeqEdge& e : seq.edges) paths.push_back(t.path(e.w, e.z));
  auto on_path = [&](int v, int p) {
    const auto& path = paths[static_cast<size_t>(p)];
    return std::find(path.begin(), path.end(), v) != path.end();
  };
  for (int i = 0; i < l; ++i) {
    const int wi = (i == 0) ? seq.anchor : seq.edges[static_cast<size_t>(i - 1)].w;
    if (!on_path(wi, i)) return bad("w endpoint is not on the next tree path");
    for (int p = i + 1; p < l; ++p)
      if (on_path(wi, p)) return bad("w endpoint reappears on a later tree path");
  }
  return ValidationResult{};
}

ModificationReport apply_sequence(SpanningTree& t, LayeringState& st,
                                  LinkCutForest& forest, const AugmentingSequence& seq) {
  const Graph& g = t.graph();
  const int k = st.k;
  const int l = static_cast<int>(seq.edges.size());
  if (l == 0) fail(ErrorKind::InvalidSequence, "cannot apply an empty sequence");
  if (seq.anchor < 0 || seq.anchor >= t.vertex_count())
    fail(ErrorKind::InvalidSequence, "sequence anchor out of range");
  if (t.degree(seq.anchor) < k)
    fail(ErrorKind::InvalidSequence, "anchor degree fell below the threshold");

  ModificationReport rep;
  for (int i = l - 1; i >= 0; --i) {
    const SeqEdge& top = seq.edges[static_cast<size_t>(i)];  // (w_{i+1}, z_{i+1})
    const int w_low = (i == 0) ? seq.anchor : seq.edges[static_cast<size_t>(i - 1)].w;
    if (t.is_tree_edge(top.edge_id))
      fail(ErrorKind::InvalidSequence, "sequence edge is already in the tree");
    // The tree edge leaving w_i toward z_{i+1}, located before any change.
    const int x = forest.path_next(w_low, top.z);
    const int rem_id = g.edge_id(w_low, x);
    if (rem_id < 0 || !t.is_tree_edge(rem_id))
      fail(ErrorKind::InvalidSequence, "tree edge to remove not found");

    t.swap_edge_trusted(top.edge_id, rem_id);
    forest.cut(w_low, x);
    forest.link(top.w, top.z);
    assert(i <= st.last_built);
    st.components(i).unite(top.w, top.z);
    rep.inserted_edges.push_back(top.edge_id);
    rep.removed_edges.push_back(rem_id);

    // Net degree transitions of this swap; x may coincide with z_{i+1}.
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
        rep.newly_marked.push_back(v);
      }
      if (st.layer_of[static_cast<size_t>(v)] == 0 && before >= k && now < k) {
        // A frozen B_0 vertex lost its high degree: retire it from anchor
        // queries for the rest of the iteration.
        st.anchor_dead[static_cast<size_t>(v)] = 1;
        forest.set_weight(v, st.h + 1);
      }
    }
  }
  return rep;
}

namespace {

void audit_after_modification(const SpanningTree& t, LayeringState& st, int k,
                              long long prev_dk, long long live_dk) {
  if (live_dk >= prev_dk)
    fail(ErrorKind::InvalidSequence, "d_k did not decrease after a modification");
  const int n = t.vertex_count();
  for (int v = 0; v < n; ++v)
    if (!st.marked[static_cast<size_t>(v)] && st.layer_of[static_cast<size_t>(v)] == kNoLayer &&
        t.degree(v) > k - 2)
      fail(ErrorKind::InvalidSequence, "unmarked unlayered vertex exceeds degree k-2");
  for (int i = 0; i <= st.last_built; ++i) {
    const std::vector<int> fresh = recompute_layer_components(t, st, i);
    std::vector<int> root_to_label(static_cast<size_t>(n), -2);
    std::vector<int> label_to_root(static_cast<size_t>(n), -2);
    for (int v = 0; v < n; ++v) {
      const bool present = st.layer_of[static_cast<size_t>(v)] > i;
      if (present != (fresh[static_cast<size_t>(v)] != -1))
        fail(ErrorKind::InvalidSequence, "presence mismatch in layer components");
      if (!present) continue;
      const int root = st.components(i).find(v);
      const int label = fresh[static_cast<size_t>(v)];
      if (root_to_label[static_cast<size_t>(root)] == -2)
        root_to_label[static_cast<size_t>(root)] = label;
      else if (root_to_label[static_cast<size_t>(root)] != label)
        fail(ErrorKind::InvalidSequence, "incremental layer components drifted (split)");
      if (label_to_root[static_cast<size_t>(label)] == -2)
        label_to_root[static_cast<size_t>(label)] = root;
      else if (label_to_root[static_cast<size_t>(label)] != root)
        fail(ErrorKind::InvalidSequence, "incremental layer components drifted (merge)");
    }
  }
}

}  // namespace

DegRedReport aug_seq_deg_red(SpanningTree& t, LinkCutForest& forest, int k, double eps,
                             const DegRedOptions& opts) {
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

  LayeringState st;
  int prev_h = -1;
  while (true) {
    st = build_layering(t, k, eps, std::move(marked));
    assign_forest_weights(st, forest);
    rep.h_trajectory.push_back(st.h);
    if (opts.audit && prev_h >= 0 && st.h <= prev_h)
      fail(ErrorKind::InvalidSequence, "layering depth failed to increase across iterations");
    assert(st.h > prev_h);
    prev_h = st.h;

    long long live_dk = t.degree_sum_at_least(k);
    long long prev_dk = live_dk;
    for (int id = 0; id < g.edge_count(); ++id) {
      if (live_dk == 0) break;  // nothing left to reduce
      const Graph::Edge& e = g.edge(id);
      if (st.marked[static_cast<size_t>(e.u)] || st.marked[static_cast<size_t>(e.v)]) continue;
      if (st.layer_of[static_cast<size_t>(e.u)] != kNoLayer ||
          st.layer_of[static_cast<size_t>(e.v)] != kNoLayer)
        continue;
      if (st.components(st.h).same_set(e.u, e.v)) continue;

      auto seq = aug_dfs(st, t, forest, id, &rep.anchor_skips);
      if (!seq) continue;
      if (opts.audit) {
        const ValidationResult vr = validate_sequence(t, k, st.marked, *seq);
        if (!vr.ok) fail(ErrorKind::InvalidSequence, vr.violation);
        if (static_cast<int>(seq->edges.size()) != st.h + 1)
          fail(ErrorKind::InvalidSequence, "sequence length differs from h + 1");
      }
      const ModificationReport mod = apply_sequence(t, st, forest, *seq);
      ++rep.modifications;
      rep.marked_growth += static_cast<long long>(mod.newly_marked.size());
      live_dk = t.degree_sum_at_least(k);
      rep.dk_trajectory.push_back(live_dk);
      if (opts.audit) audit_after_modification(t, st, k, prev_dk, live_dk);
      prev_dk = live_dk;
    }

    if (st.terminal) {
      rep.reached_terminal = true;
      break;
    }
    if (t.count_with_degree_at_least(k) == 0) {
      rep.reached_terminal = false;  // drained S_k before any layering hit the cap
      break;
    }
    marked = std::move(st.marked);
  }

  if (opts.audit && rep.reached_terminal)
    if (auto violation = check_blocking_property(t, st))
      fail(ErrorKind::InvalidSequence, *violation);

  rep.d_after = t.degree_sum_at_least(k);
  rep.sk_after = t.count_with_degree_at_least(k);
  rep.final_state = std::move(st);
  return rep;
}

std::optional<std::string> check_blocking_property(const SpanningTree& t,
                                                   const LayeringState& st) {
  const Graph& g = t.graph();
  for (int i = 0; i < st.h; ++i) {
    const DisjointSets& ds = st.components(i);
    for (int id = 0; id < g.edge_count(); ++id) {
      const Graph::Edge& e = g.edge(id);
      for (int side = 0; side < 2; ++side) {
        const int u = side ? e.v : e.u;
        const int v = side ? e.u : e.v;
        if (st.marked[static_cast<size_t>(u)]) continue;
        if (st.layer_of[static_cast<size_t>(u)] <= i || st.layer_of[static_cast<size_t>(v)] <= i)
          continue;  // an endpoint was removed with the layers
        if (ds.same_set(u, v)) continue;
        if (st.layer_of[static_cast<size_t>(v)] != i + 1)
          return "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                 ") crosses layer-" + std::to_string(i) +
                 " components without its endpoint in layer " + std::to_string(i + 1);
      }
    }
  }
  return std::nullopt;
}

std::vector<int> recompute_layer_components(const SpanningTree& t,
                                            const LayeringState& st, int layer) {
  const int n = t.vertex_count();
  std::vector<int> label(static_cast<size_t>(n), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (st.layer_of[static_cast<size_t>(s)] <= layer || label[static_cast<size_t>(s)] != -1)
      continue;
    const int comp = next++;
    label[static_cast<size_t>(s)] = comp;
    stack.assign(1, s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int id : t.adjacency(u)) {
        const int v = t.graph().other_endpoint(id, u);
        if (st.layer_of[static_cast<size_t>(v)] > layer && label[static_cast<size_t>(v)] == -1) {
          label[static_cast<size_t>(v)] = comp;
          stack.push_back(v);
        }
      }
    }
  }
  return label;
}

}  // namespace mdst
