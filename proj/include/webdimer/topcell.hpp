#pragma once

#include "webdimer/graph.hpp"

namespace webdimer {

// A planar bipartite graph with excedance k whose positroid is all of
// binom([n],k). Verified against the matching-feasibility oracle at
// construction; throws if the check fails or 0 < k < n is violated.
PlanarBipartiteGraph top_cell_graph(int k, int n);

}  // namespace webdimer
