#pragma once

#include "webdimer/graph.hpp"

namespace webdimer {

// The 6-boundary square network: a quadrilateral with weights a,b,c,d, two
// boundary-adjacent whites carrying e and f, and unit legs. Excedance 2.
// Weights given in the order a,b,c,d,e,f.
Network square_network(const std::vector<MultiPoly>& w);
Network square_network_symbolic();
// Its image under the square move, with fresh primed symbols a',b',c',d'.
Network square_network_moved_symbolic();
// Vertex ids of the quadrilateral face, for spider_move.
std::vector<std::string> square_network_face();

// An SL4-flavored graph on 8 boundary vertices: one central black vertex
// fanning out to three whites. Returns the graph; claw_weblike() is the
// 4-weblike subgraph with the center edges at multiplicities (1,2,1), and
// claw_matching() the perfect-orientation matching with boundary {6,8}.
PlanarBipartiteGraph claw_graph();
std::vector<int> claw_weblike_mult(const PlanarBipartiteGraph& g);
std::vector<int> claw_matching_edges(const PlanarBipartiteGraph& g);

// Disjoint tripods: each group of three boundary vertices joined to one
// interior white. groups must partition [n].
PlanarBipartiteGraph tripod_graph(int n, const std::vector<std::vector<int>>& groups);

// The single-cycle web on 9 boundary vertices: an interior hexagon with
// whites at boundary 1, 4, 7 and bipod whites serving {2,3}, {5,6}, {8,9}.
PlanarBipartiteGraph single_cycle_web_graph();

Network unit_network(const PlanarBipartiteGraph& g);
Network random_network(const PlanarBipartiteGraph& g, Rng& rng);

}  // namespace webdimer
