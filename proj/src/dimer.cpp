#include "webdimer/dimer.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace webdimer {

std::vector<Subset> k_subsets(int n, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    Subset cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        int need = k - static_cast<int>(cur.size());
        for (int x = next; x + need - 1 <= n; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

namespace {

struct MatchingSearch {
    const PlanarBipartiteGraph& g;
    std::vector<std::vector<int>> inc;
    std::vector<int> cover;  // -1 uncovered, else covering edge
    std::vector<char> edge_used;
    std::vector<int> chosen;
    std::vector<Matching>& out;

    MatchingSearch(const PlanarBipartiteGraph& graph, std::vector<Matching>& sink)
        : g(graph), inc(graph.incidence()), cover(graph.vertices.size(), -1),
          edge_used(graph.edges.size(), 0), out(sink) {}

    bool usable(int e) const { return cover[g.edges[e].u] == -1 && cover[g.edges[e].v] == -1; }

    // interior vertex with the fewest usable edges; -1 if all covered
    int pick() const {
        int best = -1, best_deg = -1;
        for (size_t v = 0; v < g.vertices.size(); ++v) {
            if (!g.interior(static_cast<int>(v)) || cover[v] != -1) continue;
            int d = 0;
            for (int e : inc[v])
                if (usable(e)) ++d;
            if (best == -1 || d < best_deg) {
                best = static_cast<int>(v);
                best_deg = d;
            }
            if (best_deg == 0) break;
        }
        return best;
    }

    void emit() {
        Matching m;
        m.edges = chosen;
        std::sort(m.edges.begin(), m.edges.end());
        for (size_t v = 0; v < g.vertices.size(); ++v)
            if (g.vertices[v].boundary > 0 && cover[v] != -1)
                m.boundary.push_back(g.vertices[v].boundary);
        std::sort(m.boundary.begin(), m.boundary.end());
        out.push_back(std::move(m));
    }

    void run() {
        int v = pick();
        if (v == -1) {
            emit();
            return;
        }
        for (int e : inc[v]) {
            if (!usable(e)) continue;
            cover[g.edges[e].u] = e;
            cover[g.edges[e].v] = e;
            chosen.push_back(e);
            run();
            chosen.pop_back();
            cover[g.edges[e].u] = -1;
            cover[g.edges[e].v] = -1;
        }
    }
};

}  // namespace

std::vector<Matching> enumerate_matchings(const PlanarBipartiteGraph& g) {
    std::vector<Matching> out;
    MatchingSearch(g, out).run();
    std::sort(out.begin(), out.end(),
              [](const Matching& a, const Matching& b) { return a.edges < b.edges; });
    return out;
}

bool boundary_feasible(const PlanarBipartiteGraph& g, const Subset& I) {
    // perfect matching feasibility on interior vertices plus boundary I,
    // with boundary vertices outside I deleted
    std::vector<char> required(g.vertices.size(), 0);
    std::vector<char> allowed(g.vertices.size(), 0);
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        int b = g.vertices[v].boundary;
        if (b == 0) {
            required[v] = allowed[v] = 1;
        } else if (std::binary_search(I.begin(), I.end(), b)) {
            required[v] = allowed[v] = 1;
        }
    }
    // Kuhn's algorithm from the white side (every edge is black-white)
    std::vector<int> whites;
    for (size_t v = 0; v < g.vertices.size(); ++v)
        if (required[v] && !g.vertices[v].black) whites.push_back(static_cast<int>(v));
    auto inc = g.incidence();
    std::vector<int> match(g.vertices.size(), -1);  // black -> white
    std::vector<char> visited(g.vertices.size(), 0);
    std::function<bool(int)> augment = [&](int w) -> bool {
        for (int e : inc[w]) {
            int b = g.other_end(e, w);
            if (!allowed[b] || visited[b]) continue;
            visited[b] = 1;
            if (match[b] == -1 || augment(match[b])) {
                match[b] = w;
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    for (int w : whites) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(w)) ++matched;
    }
    if (matched != static_cast<int>(whites.size())) return false;
    // every required black must be matched too
    std::vector<char> black_hit(g.vertices.size(), 0);
    for (size_t b = 0; b < match.size(); ++b)
        if (match[b] != -1) black_hit[b] = 1;
    for (size_t v = 0; v < g.vertices.size(); ++v)
        if (required[v] && g.vertices[v].black && !black_hit[v]) return false;
    return true;
}

MultiPoly boundary_measurement(const Network& nw, const Subset& I) {
    int k = nw.g.excedance();
    if (static_cast<int>(I.size()) != k)
        throw std::invalid_argument("boundary_measurement: |I| = " + std::to_string(I.size()) +
                                    " but excedance is " + std::to_string(k));
    MultiPoly total;
    for (const auto& m : enumerate_matchings(nw.g)) {
        if (m.boundary != I) continue;
        MultiPoly wt = MultiPoly::constant(1);
        for (int e : m.edges) wt *= nw.weights[e];
        total += wt;
    }
    return total;
}

const MultiPoly& PluckerVector::at(const Subset& I) const {
    auto it = values.find(I);
    if (it == values.end()) throw std::invalid_argument("Plucker subset outside binom([n],k)");
    return it->second;
}

PluckerVector plucker_vector(const Network& nw) {
    PluckerVector p;
    p.k = nw.g.excedance();
    p.n = nw.g.n;
    for (const auto& I : k_subsets(p.n, p.k)) p.values[I] = MultiPoly();
    bool any = false;
    for (const auto& m : enumerate_matchings(nw.g)) {
        any = true;
        MultiPoly wt = MultiPoly::constant(1);
        for (int e : m.edges) wt *= nw.weights[e];
        p.values[m.boundary] += wt;
    }
    if (!any)
        throw std::domain_error(
            "network has no almost perfect matching: boundary measurements are all zero, "
            "not a Grassmannian point");
    return p;
}

bool check_plucker_relations(const PluckerVector& p) {
    if (p.k < 2) return true;  // no three-term relations
    std::vector<int> ground;
    for (const auto& S : k_subsets(p.n, p.k - 2)) {
        ground.clear();
        for (int x = 1; x <= p.n; ++x)
            if (!std::binary_search(S.begin(), S.end(), x)) ground.push_back(x);
        auto with = [&](int a, int b) {
            Subset I = S;
            I.push_back(a);
            I.push_back(b);
            std::sort(I.begin(), I.end());
            return I;
        };
        int m = static_cast<int>(ground.size());
        for (int ia = 0; ia < m; ++ia)
            for (int ib = ia + 1; ib < m; ++ib)
                for (int ic = ib + 1; ic < m; ++ic)
                    for (int id = ic + 1; id < m; ++id) {
                        int a = ground[ia], b = ground[ib], c = ground[ic], d = ground[id];
                        MultiPoly lhs = p.at(with(a, c)) * p.at(with(b, d));
                        MultiPoly rhs =
                            p.at(with(a, b)) * p.at(with(c, d)) + p.at(with(a, d)) * p.at(with(b, c));
                        if (lhs != rhs) return false;
                    }
    }
    return true;
}

std::set<Subset> positroid(const PlanarBipartiteGraph& g) {
    int k = g.excedance();
    std::set<Subset> out;
    for (const auto& I : k_subsets(g.n, k))
        if (boundary_feasible(g, I)) out.insert(I);
    if (out.empty()) throw std::domain_error("graph has no almost perfect matching");
    return out;
}

}  // namespace webdimer
