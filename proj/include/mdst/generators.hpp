#pragma once

#include <optional>
#include <string>

#include "mdst/graph.hpp"

namespace mdst {

struct GenResult {
  Graph graph;
  // The exact optimum tree degree when the family pins it down.
  std::optional<int> delta_star;
  // "natural" when the graph came out of the family as-is; "augmented" when
  // extra edges were added to connect it (random families only).
  std::string provenance;
};

GenResult gen_path(int n);
GenResult gen_cycle(int n);   // n >= 3
GenResult gen_star(int n);
GenResult gen_complete(int n);
GenResult gen_hypercube(int dim);  // 0 <= dim <= 20
GenResult gen_wheel(int n);   // n >= 4: hub 0 plus a rim cycle
GenResult gen_broom(int n, int branches);  // path with `branches` extra leaves at the end

// Random Hamiltonian path over a seeded shuffle plus `extra` distinct
// non-path edges chosen by rejection.
GenResult gen_ham_path_plus(int n, int extra, unsigned long long seed);

// G(n, p) over lexicographic vertex pairs. If the sample is disconnected,
// consecutive components (by smallest vertex) are chained with one edge each
// and the result is marked "augmented".
GenResult gen_gnp(int n, double p, unsigned long long seed);

}  // namespace mdst
