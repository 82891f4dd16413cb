#pragma once

#include <map>
#include <set>
#include <vector>

#include "webdimer/graph.hpp"

namespace webdimer {

// Almost perfect matching: each interior vertex covered exactly once,
// boundary vertices at most once.
struct Matching {
    std::vector<int> edges;     // sorted edge indices
    std::vector<int> boundary;  // sorted boundary indices in 1..n
};

using Subset = std::vector<int>;  // sorted

std::vector<Subset> k_subsets(int n, int k);

// Complete, duplicate-free, ordered lexicographically by sorted edge lists.
std::vector<Matching> enumerate_matchings(const PlanarBipartiteGraph& g);

// Is there a matching with boundary exactly I? (no enumeration)
bool boundary_feasible(const PlanarBipartiteGraph& g, const Subset& I);

MultiPoly boundary_measurement(const Network& nw, const Subset& I);

struct PluckerVector {
    int k = 0, n = 0;
    std::map<Subset, MultiPoly> values;  // defined on all of binom([n],k)

    const MultiPoly& at(const Subset& I) const;
};

PluckerVector plucker_vector(const Network& nw);

// All three-term relations D_{Sac}D_{Sbd} = D_{Sab}D_{Scd} + D_{Sad}D_{Sbc}.
bool check_plucker_relations(const PluckerVector& p);

std::set<Subset> positroid(const PlanarBipartiteGraph& g);

}  // namespace webdimer
