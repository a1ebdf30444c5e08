#pragma once

#include "mdst/augment.hpp"
#include "mdst/spanning_tree.hpp"

namespace mdst {

// From-scratch re-derivation of the degree-reduction loop for differential
// testing. Uses naive breadth-first components recomputed after every
// modification and naive tree paths instead of the incremental union-find
// and link-cut structures, but follows the same candidate orders and
// tie-breaks, so its report must agree with aug_seq_deg_red field by field
// (final_state.comps excepted: the reference keeps no union-find and leaves
// it empty).
DegRedReport reference_degred(SpanningTree& t, int k, double eps);

}  // namespace mdst
