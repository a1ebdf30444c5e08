#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdst/augment.hpp"
#include "mdst/graph.hpp"
#include "mdst/spanning_tree.hpp"

namespace mdst {

// Replacements for the built-in phase thresholds, for exercising specific
// phases on instances far below the scales where they engage naturally.
struct ThresholdOverride {
  std::optional<double> large_step;   // default: 10 log2(n)^2 / eps^3
  std::optional<double> small_floor;  // default: max(3, 5 log2(n) / (16 eps_user^2))
};

struct RunConfig {
  double eps_user = 0.1;        // accuracy knob, exclusive range (0, 1/6)
  unsigned long long seed = 0;  // echoed into reports for provenance
  long long time_limit_ms = 0;  // 0 = unlimited; checked between reductions
  bool audit = false;           // forward expensive self-checks into the reductions
  ThresholdOverride override;

  // The reductions run at one eighth of the user-facing accuracy.
  double eps() const { return eps_user / 8.0; }
  void validate() const;  // BadParams outside the documented ranges
};

enum class Phase {
  LargeStepReturn,  // a high-threshold reduction stalled; certificate emitted
  SmallStepReturn,  // a windowed reduction stalled; certificate emitted
  SmallStepExit,    // the tree degree fell below the floor
};

std::string phase_name(Phase phase);

struct RunStats {
  long long degred_calls = 0;
  long long modifications = 0;
  long long wall_ms = 0;
  bool timed_out = false;
};

// Independently checkable witness that every spanning tree of the graph has
// maximum degree at least `bound`. Layers are B_0..B_{h+1} of the stalled
// terminal layering (exactly h+2 lists, trailing ones possibly empty);
// clean_components are vertex-disjoint connected sets of the current tree
// minus B_0..B_h containing no marked vertex, each sorted ascending, listed
// in order of their smallest member.
struct LowerBoundCertificate {
  int n = 0;
  int k = 0;
  double eps = 0.0;  // internal epsilon the layering ran with
  int h = 0;
  std::vector<std::vector<int>> layers;
  std::vector<std::vector<int>> clean_components;
  long long bound = 0;
};

struct RunResult {
  SpanningTree tree;
  int delta = 0;  // max degree of `tree`
  std::optional<LowerBoundCertificate> certificate;
  Phase phase = Phase::SmallStepExit;
  RunStats stats;
};

// Computes a spanning tree of approximately minimum maximum degree: starts
// from breadth-first search, then drives the degree down with augmenting
// sequences in two phases (coarse thresholds while the degree is huge, then
// a windowed scoring rule until it passes the floor). A reduction that fails
// to shrink d_k by the required factor stops the run and yields a lower
// bound certificate instead.
RunResult improved_mdst(const Graph& g, const RunConfig& cfg);

// Degree the small phase drives the tree below (absent an override).
double small_phase_floor(int n, double eps_user);

// The threshold the windowed phase reduces next: the k with positive vertex
// count maximizing k * ln(c) + ln(N_k) over the window
// [max(1, delta+1-floor(log2 n)), delta], c = 6 (2 + log_{1+eps} n).
// Ties resolve to the larger k.
int argmax_k(const SpanningTree& t, double eps);

// Extracts the best available lower-bound certificate from a terminal
// layering (NotTerminal otherwise): picks the layer index h < cap with
// (1+eps) S(h) >= S(h+1) (cumulative layer sizes; the pigeonhole guarantees
// one exists) that maximizes ceil((l-1)/|W|), breaking ties toward the
// smallest h.
LowerBoundCertificate build_certificate(const LayeringState& state, const SpanningTree& t);

// Recomputes the certificate's bound from raw graph data, trusting nothing:
// claimed components must avoid the removed layers (ComponentNotConnected),
// be pairwise disjoint (ComponentsOverlap), be connected inside the tree
// minus those layers (ComponentNotConnected), and every edge leaving a
// claimed component must end in the layer union W (UncoveredBoundaryEdge,
// with the offending edge named). Returns the recomputed bound; throws
// BoundOverclaimed when it falls short of the certificate's claim.
long long verify_certificate(const Graph& g, const SpanningTree& t,
                             const LowerBoundCertificate& cert);

// Lower bound on the number of components of the tree minus the vertex set
// b: sum of tree degrees over b, minus 2|b|, plus 2. Exact when b induces a
// subtree; 1 when b is empty.
long long component_count_bound(const SpanningTree& t, const std::vector<int>& b);

}  // namespace mdst
