#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mdst/disjoint_sets.hpp"
#include "mdst/link_cut_tree.hpp"
#include "mdst/spanning_tree.hpp"

namespace mdst {

inline constexpr int kNoLayer = std::numeric_limits<int>::max();

// Number of layering rounds at which the search gives up: the smallest
// integer >= 1 + log_{1+eps} n, computed once in floating point.
int layer_cap(int n, double eps);

// One repeat-iteration's layering of the graph under threshold k.
//
// layers[0] = B_0 is S_k frozen at construction time; layers[i] for i >= 1
// are the marked vertices reachable across layer-(i-1) components. Either a
// cross edge between unmarked, unlayered vertices in distinct top-layer
// components exists (h = its level, `terminal` false) or the construction
// ran to the cap (h = h_max, `terminal` true).
struct LayeringState {
  int k = 0;
  double eps = 0.0;
  int h = 0;
  int h_max = 0;
  bool terminal = false;
  std::vector<std::vector<int>> layers;  // B_0..B_min(h, built), ascending ids
  std::vector<int> layer_of;             // kNoLayer when in no layer
  std::vector<char> marked;              // authoritative within the iteration
  std::vector<char> anchor_dead;         // B_0 members whose degree fell below k
  std::vector<char> tagged;
  std::vector<int> arc_cursor;           // per-vertex scan position (decremental list)

  // components(i): union-find over the connected components of the tree
  // minus B_0..B_i; removed vertices stay as inert singletons. Indices past
  // `last_built` alias the last materialized one — valid because every
  // trailing layer is empty in that case.
  DisjointSets& components(int i);
  const DisjointSets& components(int i) const;

  std::vector<int> layer_sizes() const;  // |B_0|..|B_h| (missing trailing = 0)

  std::vector<DisjointSets> comps;
  int last_built = -1;
};

// Runs the layering construction for the current tree and marked set.
// Accepts k >= 2 (the degree-reduction loop itself requires k >= 3; the
// layering is well-defined one step lower and tests use that).
// Throws ThresholdTooSmall (k < 2) and EmptySk (S_k empty).
LayeringState build_layering(const SpanningTree& t, int k, double eps,
                             std::vector<char> marked);

// Installs the layering's vertex weights into the dynamic forest: layer
// index for layered vertices, h+1 for everything else (and for tagged or
// dead vertices as the iteration proceeds).
void assign_forest_weights(const LayeringState& st, LinkCutForest& forest);

struct SeqEdge {
  int edge_id;
  int w;  // w_i: the layered endpoint (for the last edge: unmarked)
  int z;  // z_i: the unmarked, unlayered endpoint
};

// edges[i-1] = (w_i, z_i) for i = 1..l; anchor = w_0, a B_0 vertex of
// current degree >= k on the tree path between w_1 and z_1.
struct AugmentingSequence {
  std::vector<SeqEdge> edges;
  int anchor = -1;
};

// Recursive search level, exposed for unit tests. Level i >= 2 enumerates
// untagged w on the tree path of the given edge with weight exactly i-1,
// then scans w's remaining incident edges for an unmarked, unlayered z in a
// different layer-(i-2) component; level 1 accepts unconditionally. Appends
// the found edges bottom-up into `out`.
bool aug_dfs_level(LayeringState& st, const SpanningTree& t, LinkCutForest& forest,
                   int level, int edge_id, int w_end, int z_end,
                   std::vector<SeqEdge>& out);

// Full search from a scan edge (level h+1): runs aug_dfs_level and resolves
// the anchor via a path-minimum query on the level-1 edge. If no anchor of
// weight 0 survives on that path, the sequence is discarded and
// *anchor_skips is incremented (only reachable when h = 0; deeper levels
// pre-check anchor liveness before descending).
std::optional<AugmentingSequence> aug_dfs(LayeringState& st, const SpanningTree& t,
                                          LinkCutForest& forest, int edge_id,
                                          long long* anchor_skips);

struct ValidationResult {
  bool ok = true;
  std::string violation;
};

// Checks the augmenting-sequence definition directly with naive tree paths:
// (i) anchor and each w_i lie on the next edge's tree path and on no later
// one; (ii) every z_i and the last w are unmarked, earlier w_i marked; plus
// vertex-disjointness and non-tree-ness of the edges.
ValidationResult validate_sequence(const SpanningTree& t, int k,
                                   const std::vector<char>& marked,
                                   const AugmentingSequence& seq);

struct ModificationReport {
  std::vector<int> inserted_edges;  // graph edge ids, in application order
  std::vector<int> removed_edges;
  std::vector<int> newly_marked;    // in marking order
};

// Applies the sequence: for i = l-1 down to 0, swap in (w_{i+1}, z_{i+1})
// and swap out the tree edge from w_i toward z_{i+1}; merge the layer-i
// components of the inserted edge's endpoints; mark every vertex whose
// degree transitions to exactly k-1, and retire B_0 vertices whose degree
// falls below k from future anchor queries.
ModificationReport apply_sequence(SpanningTree& t, LayeringState& st,
                                  LinkCutForest& forest, const AugmentingSequence& seq);

struct DegRedOptions {
  // Validates every sequence before applying, cross-checks incremental
  // layer components against from-scratch recomputation after every
  // modification, and checks the blocking property on the final state.
  // Intended for tests on small instances; expensive.
  bool audit = false;
};

struct DegRedReport {
  int k = 0;
  long long d_before = 0;
  long long d_after = 0;
  int sk_before = 0;
  int sk_after = 0;
  long long modifications = 0;
  long long marked_growth = 0;
  long long anchor_skips = 0;
  // True: the last layering ran to the cap with no cross edge. False: S_k
  // drained to empty mid-run and the loop returned early.
  bool reached_terminal = false;
  std::vector<int> h_trajectory;         // h per repeat-iteration
  std::vector<long long> dk_trajectory;  // d_k after each modification
  LayeringState final_state;             // last layering built (holds final marked set)
};

// The degree-reduction loop: repeat { layer; scan edges in ascending id for
// unmarked, unlayered cross pairs; search and apply augmenting sequences }
// until a layering reaches the cap. Requires 3 <= k; throws EmptySk when
// S_k is empty at entry (callers must not ask to reduce nothing).
DegRedReport aug_seq_deg_red(SpanningTree& t, LinkCutForest& forest, int k, double eps,
                             const DegRedOptions& opts = {});

// Blocking-property check over all edges (test/audit helper): for every
// 0 <= i < h, an edge (u, v) with u unmarked, both endpoints outside
// B_0..B_i, and distinct layer-i components must have v in B_{i+1}.
// Returns a description of the first violation, or nullopt.
std::optional<std::string> check_blocking_property(const SpanningTree& t,
                                                   const LayeringState& st);

// From-scratch recomputation of the layer-i partition for audits: component
// label per vertex, -1 for removed.
std::vector<int> recompute_layer_components(const SpanningTree& t,
                                            const LayeringState& st, int layer);

}  // namespace mdst
