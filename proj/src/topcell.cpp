#include "webdimer/topcell.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "webdimer/dimer.hpp"
#include "webdimer/moves.hpp"

namespace webdimer {

namespace {

// k = 1: a single interior white star.
PlanarBipartiteGraph star_graph(int n) {
    GraphBuilder b;
    b.vertex("w", false, 0, 0, 0);
    for (int i = 1; i <= n; ++i) {
        double a = 2 * M_PI * (i - 1) / n;
        b.vertex("b" + std::to_string(i), true, i, std::cos(a), std::sin(a));
        b.edge("e" + std::to_string(i), "b" + std::to_string(i), "w");
    }
    return b.graph(n);
}

// General case: the doubled path-network of the full k x (n-k) grid.
// Each grid cell (i,j) carries a black/white pair; flow runs right-to-left
// along rows and downward along columns. Row terminals sit on the right
// (through a bivalent white), column terminals on the bottom. Any p row
// terminals route disjointly to any p column terminals in the full grid,
// so every k-subset of [n] is the boundary of some matching.
PlanarBipartiteGraph grid_graph(int k, int n) {
    int m = n - k;  // columns
    GraphBuilder gb;
    auto W = [](int i, int j) { return "w" + std::to_string(i) + "_" + std::to_string(j); };
    auto B = [](int i, int j) { return "b" + std::to_string(i) + "_" + std::to_string(j); };
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= m; ++j) {
            gb.vertex(B(i, j), true, 0, j - 0.2, -i);
            gb.vertex(W(i, j), false, 0, j + 0.2, -i);
            gb.edge("p" + std::to_string(i) + "_" + std::to_string(j), B(i, j), W(i, j));
        }
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j + 1 <= m; ++j)
            gb.edge("h" + std::to_string(i) + "_" + std::to_string(j), W(i, j + 1), B(i, j));
    for (int i = 1; i + 1 <= k; ++i)
        for (int j = 1; j <= m; ++j)
            gb.edge("v" + std::to_string(i) + "_" + std::to_string(j), W(i, j), B(i + 1, j));
    // column sinks: boundary 1..m left to right along the bottom
    for (int j = 1; j <= m; ++j) {
        gb.vertex("c" + std::to_string(j), true, j, j + 0.2, -k - 1.0);
        gb.edge("s" + std::to_string(j), W(k, j), "c" + std::to_string(j));
    }
    // row sources: boundary m+1..n up the right side, via a bivalent white
    for (int i = k; i >= 1; --i) {
        int idx = m + (k - i) + 1;
        gb.vertex("q" + std::to_string(i), false, 0, m + 0.8, -i);
        gb.vertex("r" + std::to_string(i), true, idx, m + 1.6, -i);
        gb.edge("t" + std::to_string(i), "q" + std::to_string(i), B(i, m));
        gb.edge("u" + std::to_string(i), "r" + std::to_string(i), "q" + std::to_string(i));
    }
    return gb.graph(n);
}

// Shrink with weight-preserving local moves: contract two-valent interior
// vertices and merge parallel edges until stable. Moves keep the boundary
// measurements proportional, so the positroid is unchanged.
Network reduce_network(Network nw) {
    bool changed = true;
    while (changed) {
        changed = false;
        auto inc = nw.g.incidence();
        for (size_t v = 0; v < nw.g.vertices.size() && !changed; ++v) {
            if (!nw.g.interior(static_cast<int>(v)) || inc[v].size() != 2) continue;
            try {
                nw = remove_bivalent(nw, nw.g.vertices[v].id).network;
                changed = true;
            } catch (const std::invalid_argument&) {
                // blocked by a caveat (boundary-adjacent, parallel pair) -- skip
            }
        }
        if (changed) continue;
        for (size_t e = 0; e < nw.g.edges.size() && !changed; ++e) {
            int u = nw.g.edges[e].u, v = nw.g.edges[e].v;
            for (size_t f = e + 1; f < nw.g.edges.size() && !changed; ++f) {
                if ((nw.g.edges[f].u == u && nw.g.edges[f].v == v) ||
                    (nw.g.edges[f].u == v && nw.g.edges[f].v == u)) {
                    try {
                        nw = merge_parallel(nw, nw.g.vertices[u].id, nw.g.vertices[v].id).network;
                        changed = true;
                    } catch (const std::invalid_argument&) {
                    }
                }
            }
        }
    }
    return nw;
}

}  // namespace

PlanarBipartiteGraph top_cell_graph(int k, int n) {
    if (!(0 < k && k < n))
        throw std::invalid_argument("top_cell_graph: need 0 < k < n, got k=" + std::to_string(k) +
                                    " n=" + std::to_string(n));
    PlanarBipartiteGraph g = (k == 1) ? star_graph(n) : grid_graph(k, n);
    if (k > 1) {
        Network nw{g, std::vector<MultiPoly>(g.edges.size(), MultiPoly::constant(1))};
        g = reduce_network(std::move(nw)).g;
    }
    auto bad = g.validate();
    if (!bad.empty()) throw std::logic_error("top_cell_graph: invalid graph: " + bad.front());
    if (g.excedance() != k) throw std::logic_error("top_cell_graph: excedance self-check failed");
    for (const auto& I : k_subsets(n, k))
        if (!boundary_feasible(g, I)) {
            std::string s;
            for (int x : I) s += std::to_string(x) + ",";
            throw std::logic_error("top_cell_graph: positroid self-check failed at {" + s + "}");
        }
    return g;
}

}  // namespace webdimer
