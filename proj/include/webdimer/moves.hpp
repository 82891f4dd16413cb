#pragma once

#include "webdimer/dimer.hpp"
#include "webdimer/report.hpp"

namespace webdimer {

// Every move returns a fresh network N' and the exact scalar with
// plucker_vector(N) = scalar * plucker_vector(N'), entrywise.
struct MoveResult {
    Network network;
    MultiPoly scalar;
};

// (G) multiply the weights at an interior vertex by alpha; scalar is 1/alpha.
MoveResult gauge(const Network& nw, const std::string& vertex, const Rational& alpha);

// (M1) spider / square move on a quadrilateral face given by its four
// vertices in cyclic order. The two black corners must be trivalent with a
// leaf edge each; leaf edges are gauge-fixed to 1 first and those gauge
// factors fold into the scalar.
MoveResult spider_move(const Network& nw, const std::vector<std::string>& face);

// (M2) contract a two-valent interior vertex.
MoveResult remove_bivalent(const Network& nw, const std::string& vertex);

// (R1) parallel edges between u and v become one edge with the summed weight.
MoveResult merge_parallel(const Network& nw, const std::string& u, const std::string& v);

// (R2) remove an interior leaf v together with its neighbor and the
// neighbor's edges; rejected when the leaf edge is a boundary edge.
MoveResult remove_leaf(const Network& nw, const std::string& vertex);

// (R3) remove an edge joining two interior degree-one vertices.
MoveResult remove_dipole(const Network& nw, const std::string& edge);

Report verify_move_invariance(const Network& before, const MoveResult& result);

}  // namespace webdimer
