#include "mdst/driver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <string>
#include <utility>

#include "mdst/errors.hpp"
#include "mdst/link_cut_tree.hpp"

namespace mdst {

void RunConfig::validate() const {
  if (!(eps_user > 0.0) || !(eps_user < 1.0 / 6.0))
    fail(ErrorKind::BadParams, "epsilon must lie strictly between 0 and 1/6");
  if (time_limit_ms < 0)
    fail(ErrorKind::BadParams, "time limit must be nonnegative");
}

std::string phase_name(Phase phase) {
  switch (phase) {
    case Phase::LargeStepReturn:
      return "large-step-return";
    case Phase::SmallStepReturn:
      return "small-step-return";
    case Phase::SmallStepExit:
      return "small-step-exit";
  }
  return "unknown";
}

double small_phase_floor(int n, double eps_user) {
  const double log2n = std::log2(static_cast<double>(std::max(2, n)));
  return std::max(3.0, 5.0 / (16.0 * eps_user * eps_user) * log2n);
}

int argmax_k(const SpanningTree& t, double eps) {
  const int n = t.vertex_count();
  const int delta = t.max_degree();
  if (delta < 1) fail(ErrorKind::BadParams, "cannot score thresholds of an edgeless tree");
  const int window = static_cast<int>(std::floor(std::log2(static_cast<double>(std::max(2, n)))));
  const int lo = std::max(1, delta + 1 - window);
  const long double c =
      6.0L *
      (2.0L + std::log(static_cast<long double>(n)) / std::log1p(static_cast<long double>(eps)));
  const long double log_c = std::log(c);

  int best = -1;
  long double best_score = 0.0L;
  // Descending so that score ties resolve to the larger threshold.
  for (int i = delta; i >= lo; --i) {
    const int ni = t.count_with_degree(i);
    if (ni == 0) continue;
    const long double score =
        static_cast<long double>(i) * log_c + std::log(static_cast<long double>(ni));
    if (best == -1 || score > best_score + 1e-12L) {
      best = i;
      best_score = score;
    }
  }
  assert(best >= 1);  // the window contains delta and N_delta >= 1
  return best;
}

namespace {

// Failure test for one reduction: the drop in d_k stayed below an eps^2/(2L)
// fraction of the starting value (L = log2 n). Evaluated in extended
// precision; the quantities are exact integers, so the comparison is stable.
bool reduction_failed(long long d_before, long long d_after, int n, double eps) {
  const long double log2n = std::log2(static_cast<long double>(std::max(2, n)));
  return 2.0L * log2n * static_cast<long double>(d_before - d_after) <
         static_cast<long double>(eps) * static_cast<long double>(eps) *
             static_cast<long double>(d_before);
}

// Connected components of the tree minus layers 0..h that contain no marked
// vertex; each sorted ascending, listed by smallest member (the outer scan
// reaches every component at its minimum vertex first).
std::vector<std::vector<int>> clean_components_below(const SpanningTree& t,
                                                     const LayeringState& st, int h) {
  const int n = t.vertex_count();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<std::vector<int>> result;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<size_t>(s)] || st.layer_of[static_cast<size_t>(s)] <= h) continue;
    std::vector<int> comp;
    bool clean = true;
    stack.assign(1, s);
    seen[static_cast<size_t>(s)] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      if (st.marked[static_cast<size_t>(u)]) clean = false;
      for (int id : t.adjacency(u)) {
        const int v = t.graph().other_endpoint(id, u);
        if (st.layer_of[static_cast<size_t>(v)] > h && !seen[static_cast<size_t>(v)]) {
          seen[static_cast<size_t>(v)] = 1;
          stack.push_back(v);
        }
      }
    }
    if (clean) {
      std::sort(comp.begin(), comp.end());
      result.push_back(std::move(comp));
    }
  }
  return result;
}

}  // namespace

LowerBoundCertificate build_certificate(const LayeringState& st, const SpanningTree& t) {
  if (!st.terminal)
    fail(ErrorKind::NotTerminal, "certificate extraction requires a terminal layering");

  LowerBoundCertificate cert;
  cert.n = t.vertex_count();
  cert.k = st.k;
  cert.eps = st.eps;

  // Cumulative layer sizes up to the cap; layers never materialized are empty.
  std::vector<long long> cum(static_cast<size_t>(st.h_max) + 1, 0);
  long long acc = 0;
  for (int i = 0; i <= st.h_max; ++i) {
    if (i < static_cast<int>(st.layers.size()))
      acc += static_cast<long long>(st.layers[static_cast<size_t>(i)].size());
    cum[static_cast<size_t>(i)] = acc;
  }

  bool have = false;
  int best_h = 0;
  long long best_bound = -1;
  std::vector<std::vector<int>> best_comps;
  for (int h = 0; h + 1 <= st.h_max; ++h) {
    // Admissible: the next layer did not grow the union by more than (1+eps).
    if ((1.0L + static_cast<long double>(st.eps)) *
            static_cast<long double>(cum[static_cast<size_t>(h)]) <
        static_cast<long double>(cum[static_cast<size_t>(h) + 1]))
      continue;
    std::vector<std::vector<int>> comps = clean_components_below(t, st, h);
    const long long l = static_cast<long long>(comps.size());
    const long long w = cum[static_cast<size_t>(h) + 1];
    const long long bound = (l <= 1) ? 0 : (l - 1 + w - 1) / w;
    if (!have || bound > best_bound) {
      have = true;
      best_h = h;
      best_bound = bound;
      best_comps = std::move(comps);
    }
  }
  if (!have)
    fail(ErrorKind::NotTerminal, "no admissible layer index below the cap");

  cert.h = best_h;
  cert.bound = best_bound;
  cert.clean_components = std::move(best_comps);
  cert.layers.assign(static_cast<size_t>(best_h) + 2, {});
  for (int i = 0; i <= best_h + 1 && i < static_cast<int>(st.layers.size()); ++i)
    cert.layers[static_cast<size_t>(i)] = st.layers[static_cast<size_t>(i)];
  return cert;
}

long long verify_certificate(const Graph& g, const SpanningTree& t,
                             const LowerBoundCertificate& cert) {
  const int n = g.vertex_count();
  if (cert.n != n)
    fail(ErrorKind::BadParams, "certificate was issued for " + std::to_string(cert.n) +
                                   " vertices but the graph has " + std::to_string(n));
  if (cert.h < 0) fail(ErrorKind::BadParams, "negative layer index");
  if (static_cast<int>(cert.layers.size()) != cert.h + 2)
    fail(ErrorKind::BadParams, "expected exactly h+2 layer lists, got " +
                                   std::to_string(cert.layers.size()));

  std::vector<char> removed(static_cast<size_t>(n), 0);
  std::vector<char> in_w(static_cast<size_t>(n), 0);
  for (int i = 0; i < static_cast<int>(cert.layers.size()); ++i) {
    for (int v : cert.layers[static_cast<size_t>(i)]) {
      if (v < 0 || v >= n) fail(ErrorKind::IdOutOfRange, "layer vertex out of range");
      if (in_w[static_cast<size_t>(v)])
        fail(ErrorKind::BadParams, "vertex " + std::to_string(v) + " listed in two layers");
      in_w[static_cast<size_t>(v)] = 1;
      if (i <= cert.h) removed[static_cast<size_t>(v)] = 1;
    }
  }
  long long w_size = 0;
  for (int v = 0; v < n; ++v) w_size += in_w[static_cast<size_t>(v)];

  std::vector<int> claim(static_cast<size_t>(n), -1);
  for (int ci = 0; ci < static_cast<int>(cert.clean_components.size()); ++ci) {
    const auto& comp = cert.clean_components[static_cast<size_t>(ci)];
    if (comp.empty()) fail(ErrorKind::ComponentNotConnected, "claimed component is empty");
    for (int v : comp) {
      if (v < 0 || v >= n) fail(ErrorKind::IdOutOfRange, "component vertex out of range");
      if (removed[static_cast<size_t>(v)])
        fail(ErrorKind::ComponentNotConnected,
             "claimed component contains removed vertex " + std::to_string(v));
      if (claim[static_cast<size_t>(v)] != -1)
        fail(ErrorKind::ComponentsOverlap,
             "vertex " + std::to_string(v) + " appears in two claimed components");
      claim[static_cast<size_t>(v)] = ci;
    }
    // Connectivity within the claimed set, via tree edges only.
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{comp[0]};
    seen[static_cast<size_t>(comp[0])] = 1;
    int visited = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int id : t.adjacency(u)) {
        const int v = t.graph().other_endpoint(id, u);
        if (claim[static_cast<size_t>(v)] == ci && !seen[static_cast<size_t>(v)]) {
          seen[static_cast<size_t>(v)] = 1;
          ++visited;
          stack.push_back(v);
        }
      }
    }
    if (visited != static_cast<int>(comp.size()))
      fail(ErrorKind::ComponentNotConnected,
           "claimed component containing vertex " + std::to_string(comp[0]) +
               " is not connected in the tree minus the removed layers");
  }

  // Every edge leaving a claimed component must end in the witness set W.
  for (int id = 0; id < g.edge_count(); ++id) {
    const Graph::Edge& e = g.edge(id);
    for (int side = 0; side < 2; ++side) {
      const int u = side ? e.v : e.u;
      const int v = side ? e.u : e.v;
      if (claim[static_cast<size_t>(u)] == -1) continue;
      if (claim[static_cast<size_t>(v)] == claim[static_cast<size_t>(u)]) continue;
      if (!in_w[static_cast<size_t>(v)])
        fail(ErrorKind::UncoveredBoundaryEdge,
             "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                 ") leaves a claimed component but misses the witness set");
    }
  }

  const long long l = static_cast<long long>(cert.clean_components.size());
  long long recomputed = 0;
  if (l >= 2) {
    assert(w_size >= 1);  // coverage over a connected graph forces a witness
    recomputed = (l - 1 + w_size - 1) / w_size;
  }
  if (recomputed < cert.bound)
    fail(ErrorKind::BoundOverclaimed,
         "certificate claims a bound of " + std::to_string(cert.bound) +
             " but the data supports only " + std::to_string(recomputed));
  return recomputed;
}

long long component_count_bound(const SpanningTree& t, const std::vector<int>& b) {
  if (b.empty()) return 1;
  long long deg_sum = 0;
  for (int v : b) deg_sum += t.degree(v);
  return deg_sum - 2 * static_cast<long long>(b.size()) + 2;
}

RunResult improved_mdst(const Graph& g, const RunConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&start] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  };
  auto out_of_time = [&] {
    return cfg.time_limit_ms > 0 && elapsed_ms() >= cfg.time_limit_ms;
  };

  const int n = g.vertex_count();
  SpanningTree tree = bfs_tree(g);
  const double eps = cfg.eps();
  const double log2n = std::log2(static_cast<double>(std::max(2, n)));

  RunStats stats;
  std::optional<LinkCutForest> forest;  // built lazily before the first reduction
  DegRedOptions reduction_opts;
  reduction_opts.audit = cfg.audit;

  auto run_reduction = [&](int k) {
    if (!forest) {
      forest.emplace(n);
      for (int id : tree.tree_edge_ids()) {
        const Graph::Edge& e = g.edge(id);
        forest->link(e.u, e.v);
      }
    }
    DegRedReport rep = aug_seq_deg_red(tree, *forest, k, eps, reduction_opts);
    ++stats.degred_calls;
    stats.modifications += rep.modifications;
    return rep;
  };

  auto finish = [&](Phase phase, std::optional<LowerBoundCertificate> cert) {
    stats.wall_ms = elapsed_ms();
    RunResult res{std::move(tree), 0, std::move(cert), phase, stats};
    res.delta = res.tree.max_degree();
    return res;
  };

  // Coarse phase: reduce thresholds a fixed fraction below the current
  // degree, climbing k until d_k empties, as long as the degree is huge.
  const double t_large = cfg.override.large_step
                             ? *cfg.override.large_step
                             : 10.0 * log2n * log2n / (eps * eps * eps);
  while (!stats.timed_out && tree.max_degree() >= t_large) {
    const int delta_entry = tree.max_degree();
    int k = std::max(3, static_cast<int>(std::ceil((1.0 - 2.0 * eps) * delta_entry)) + 1);
    while (tree.degree_sum_at_least(k) > 0) {
      if (out_of_time()) {
        stats.timed_out = true;
        break;
      }
      const long long d = tree.degree_sum_at_least(k);
      if (tree.degree_sum_at_least(k - 1) <= 2 * d) {
        const DegRedReport rep = run_reduction(k);
        if (reduction_failed(d, rep.d_after, n, eps)) {
          assert(rep.reached_terminal);
          return finish(Phase::LargeStepReturn, build_certificate(rep.final_state, tree));
        }
      }
      ++k;
    }
    if (tree.max_degree() == delta_entry) break;  // no progress at this scale
  }

  // Windowed phase, run all the way down to the floor (never below 3: a
  // reduction below that threshold is undefined).
  const double floor_value = cfg.override.small_floor
                                 ? std::max(3.0, *cfg.override.small_floor)
                                 : small_phase_floor(n, cfg.eps_user);
  while (!stats.timed_out && tree.max_degree() >= floor_value) {
    const int delta_entry = tree.max_degree();
    while (tree.max_degree() == delta_entry) {
      if (out_of_time()) {
        stats.timed_out = true;
        break;
      }
      const int k = std::max(3, argmax_k(tree, eps));
      const long long d = tree.degree_sum_at_least(k);
      const DegRedReport rep = run_reduction(k);
      if (reduction_failed(d, rep.d_after, n, eps)) {
        assert(rep.reached_terminal);
        LowerBoundCertificate cert = build_certificate(rep.final_state, tree);
        // In the regime where the chain of threshold relations is binding,
        // the certificate recovers a constant fraction of k.
        assert(!(static_cast<double>(k) >= 19.0 * log2n / (eps * eps)) ||
               static_cast<long double>(cert.bound) >=
                   static_cast<long double>(k) * (1.0L - 4.0L * static_cast<long double>(eps)) /
                       (1.0L + static_cast<long double>(eps)));
        return finish(Phase::SmallStepReturn, std::move(cert));
      }
    }
  }
  return finish(Phase::SmallStepExit, std::nullopt);
}

}  // namespace mdst
