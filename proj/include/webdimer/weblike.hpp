#pragma once

#include <functional>
#include <vector>

#include "webdimer/invariant.hpp"

namespace webdimer {

// Multiplicity function m: E -> {0..r} with interior vertex sums equal to r.
struct WeblikeSubgraph {
    const PlanarBipartiteGraph* graph = nullptr;
    int r = 1;
    std::vector<int> mult;  // per edge

    std::vector<int> degree() const;  // boundary multiplicities lambda
    bool valid() const;
    MultiPoly weight(const std::vector<MultiPoly>& edge_weights) const;
};

// Complete list in deterministic order (lex on the multiplicity vectors).
std::vector<WeblikeSubgraph> enumerate_weblike(const PlanarBipartiteGraph& g, int r,
                                               const std::vector<int>& lambda);

WeblikeSubgraph superpose(const PlanarBipartiteGraph& g,
                          const std::vector<Matching>& matchings);

// Edge labeling by subsets S(e) with |S(e)| = m(e), disjoint at interior
// vertices. `boundary` constrains boundary edge masks; empty = free.
// Calls sink(per-edge masks) for each consistent labeling.
void enumerate_labelings(const WeblikeSubgraph& w, const Label* boundary,
                         const std::function<void(const std::vector<std::uint32_t>&)>& sink);

long long count_consistent_labelings(const WeblikeSubgraph& w, const Label& S);

// a(S;W) for every S in the label space at once.
std::vector<long long> labeling_counts(const WeblikeSubgraph& w, const LabelSpace& space);

// The canonical tensor invariant of W: value at S is sign(S) a(S;W).
Invariant bold_value_table(const WeblikeSubgraph& w);
Invariant bold_value_table(const WeblikeSubgraph& w, std::shared_ptr<const LabelSpace> space);

std::vector<Label> enumerate_boundary_labels(int r, int k, const std::vector<int>& lambda);

}  // namespace webdimer
