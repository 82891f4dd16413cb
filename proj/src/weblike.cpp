#include "webdimer/weblike.hpp"

#include <algorithm>
#include <stdexcept>

namespace webdimer {

std::vector<int> WeblikeSubgraph::degree() const {
    const auto& g = *graph;
    std::vector<int> lambda(g.n, 0);
    auto inc = g.incidence();
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        int b = g.vertices[v].boundary;
        if (b == 0) continue;
        for (int e : inc[v]) lambda[b - 1] += mult[e];
    }
    return lambda;
}

bool WeblikeSubgraph::valid() const {
    const auto& g = *graph;
    if (mult.size() != g.edges.size()) return false;
    for (int m : mult)
        if (m < 0 || m > r) return false;
    auto inc = g.incidence();
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        if (!g.interior(static_cast<int>(v))) continue;
        int sum = 0;
        for (int e : inc[v]) sum += mult[e];
        if (sum != r) return false;
    }
    return true;
}

MultiPoly WeblikeSubgraph::weight(const std::vector<MultiPoly>& edge_weights) const {
    MultiPoly w = MultiPoly::constant(1);
    for (size_t e = 0; e < mult.size(); ++e)
        if (mult[e] > 0) w *= edge_weights[e].pow(static_cast<unsigned>(mult[e]));
    return w;
}

std::vector<WeblikeSubgraph> enumerate_weblike(const PlanarBipartiteGraph& g, int r,
                                               const std::vector<int>& lambda) {
    if (static_cast<int>(lambda.size()) != g.n)
        throw std::invalid_argument("enumerate_weblike: lambda length != n");
    if (!Degree::valid(lambda, r, g.excedance()))
        throw std::invalid_argument("enumerate_weblike: invalid degree for (r, excedance)");
    auto inc = g.incidence();
    size_t E = g.edges.size();
    std::vector<int> mult(E, -1);
    std::vector<char> interior(g.vertices.size(), 0);
    std::vector<int> need(g.vertices.size(), 0);        // residual sum, interior only
    std::vector<int> free_edges(g.vertices.size(), 0);  // unassigned incident edges
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        interior[v] = g.interior(static_cast<int>(v)) ? 1 : 0;
        need[v] = r;
        free_edges[v] = static_cast<int>(inc[v].size());
    }

    bool impossible = false;
    auto place = [&](int e, int val) {
        mult[e] = val;
        for (int v : {g.edges[e].u, g.edges[e].v}) {
            need[v] -= val;
            free_edges[v]--;
        }
    };
    auto unplace = [&](int e) {
        int val = mult[e];
        mult[e] = -1;
        for (int v : {g.edges[e].u, g.edges[e].v}) {
            need[v] += val;
            free_edges[v]++;
        }
    };
    auto locally_ok = [&](int v) {
        if (!interior[v]) return true;
        return need[v] >= 0 && need[v] <= free_edges[v] * r;
    };

    // boundary edges are forced to lambda_i
    std::vector<int> forced_edges;
    for (size_t v = 0; v < g.vertices.size() && !impossible; ++v) {
        int b = g.vertices[v].boundary;
        if (b == 0) continue;
        if (inc[v].empty()) {
            if (lambda[b - 1] != 0) impossible = true;
            continue;
        }
        for (int e : inc[v]) {
            if (mult[e] != -1) {
                if (mult[e] != lambda[b - 1]) impossible = true;
                continue;
            }
            place(e, lambda[b - 1]);
            forced_edges.push_back(e);
            if (!locally_ok(g.edges[e].u) || !locally_ok(g.edges[e].v)) impossible = true;
        }
    }

    std::vector<WeblikeSubgraph> out;
    std::function<void(size_t)> rec = [&](size_t from) {
        size_t e = from;
        while (e < E && mult[e] != -1) ++e;
        if (e == E) {
            WeblikeSubgraph w;
            w.graph = &g;
            w.r = r;
            w.mult = mult;
            out.push_back(std::move(w));
            return;
        }
        for (int val = 0; val <= r; ++val) {
            place(static_cast<int>(e), val);
            if (locally_ok(g.edges[e].u) && locally_ok(g.edges[e].v)) rec(e + 1);
            unplace(static_cast<int>(e));
        }
    };
    if (!impossible) rec(0);
    for (auto it = forced_edges.rbegin(); it != forced_edges.rend(); ++it) unplace(*it);

    std::sort(out.begin(), out.end(),
              [](const WeblikeSubgraph& a, const WeblikeSubgraph& b) { return a.mult < b.mult; });
    return out;
}

WeblikeSubgraph superpose(const PlanarBipartiteGraph& g,
                          const std::vector<Matching>& matchings) {
    WeblikeSubgraph w;
    w.graph = &g;
    w.r = static_cast<int>(matchings.size());
    w.mult.assign(g.edges.size(), 0);
    for (const auto& m : matchings)
        for (int e : m.edges) w.mult[e]++;
    return w;
}

namespace {

struct LabelingSearch {
    const PlanarBipartiteGraph& g;
    const WeblikeSubgraph& w;
    std::vector<std::vector<int>> inc;
    std::vector<std::uint32_t> used;       // per vertex, colors taken (interior only)
    std::vector<int> remaining;            // per vertex, unassigned support edges
    std::vector<std::uint32_t> assignment; // per edge, 0 also for non-support
    std::vector<int> order;                // support edges, BFS from boundary
    const std::function<void(const std::vector<std::uint32_t>&)>& sink;

    LabelingSearch(const WeblikeSubgraph& ww,
                   const std::function<void(const std::vector<std::uint32_t>&)>& s)
        : g(*ww.graph), w(ww), inc(g.incidence()), used(g.vertices.size(), 0),
          remaining(g.vertices.size(), 0), assignment(g.edges.size(), 0), sink(s) {
        std::vector<char> seen_e(g.edges.size(), 0), seen_v(g.vertices.size(), 0);
        std::vector<int> queue;
        for (size_t v = 0; v < g.vertices.size(); ++v)
            if (g.vertices[v].boundary > 0) {
                queue.push_back(static_cast<int>(v));
                seen_v[v] = 1;
            }
        for (size_t h = 0; h < queue.size(); ++h) {
            int v = queue[h];
            for (int e : inc[v]) {
                if (w.mult[e] > 0 && !seen_e[e]) {
                    seen_e[e] = 1;
                    order.push_back(e);
                }
                int u = g.other_end(e, v);
                if (!seen_v[u]) {
                    seen_v[u] = 1;
                    queue.push_back(u);
                }
            }
        }
        // components not reachable from the boundary
        for (size_t e = 0; e < g.edges.size(); ++e)
            if (w.mult[e] > 0 && !seen_e[e]) order.push_back(static_cast<int>(e));
        for (size_t e = 0; e < g.edges.size(); ++e)
            if (w.mult[e] > 0) {
                remaining[g.edges[e].u]++;
                remaining[g.edges[e].v]++;
            }
    }

    bool interior(int v) const { return g.interior(v); }

    void run(size_t pos) {
        if (pos == order.size()) {
            sink(assignment);
            return;
        }
        int e = order[pos];
        int need = w.mult[e];
        std::uint32_t full = (1u << w.r) - 1;
        std::uint32_t avail = full;
        int u = g.edges[e].u, v = g.edges[e].v;
        if (interior(u)) avail &= ~used[u];
        if (interior(v)) avail &= ~used[v];
        if (popcount(avail) < need) return;
        // enumerate submasks of avail with popcount == need
        std::vector<int> bits;
        for (std::uint32_t m = avail; m; m &= m - 1) bits.push_back(__builtin_ctz(m));
        std::vector<int> pick;
        std::function<void(int)> choose = [&](int from) {
            if (static_cast<int>(pick.size()) == need) {
                std::uint32_t sub = 0;
                for (int b : pick) sub |= (1u << b);
                assignment[e] = sub;
                if (interior(u)) used[u] |= sub;
                if (interior(v)) used[v] |= sub;
                run(pos + 1);
                if (interior(u)) used[u] &= ~sub;
                if (interior(v)) used[v] &= ~sub;
                assignment[e] = 0;
                return;
            }
            for (int i = from;
                 i <= static_cast<int>(bits.size()) - (need - static_cast<int>(pick.size())); ++i) {
                pick.push_back(bits[i]);
                choose(i + 1);
                pick.pop_back();
            }
        };
        choose(0);
    }
};

Label boundary_of_assignment(const PlanarBipartiteGraph& g,
                             const std::vector<std::uint32_t>& assignment) {
    Label S(g.n, 0);
    auto inc = g.incidence();
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        int b = g.vertices[v].boundary;
        if (b == 0) continue;
        for (int e : inc[v]) S[b - 1] |= assignment[e];
    }
    return S;
}

}  // namespace

void enumerate_labelings(const WeblikeSubgraph& w, const Label* boundary,
                         const std::function<void(const std::vector<std::uint32_t>&)>& sink) {
    if (!w.valid()) throw std::invalid_argument("invalid weblike subgraph");
    const auto& g = *w.graph;
    if (boundary) {
        // check requested boundary sizes match the degree
        auto lam = w.degree();
        for (int i = 0; i < g.n; ++i)
            if (popcount((*boundary)[i]) != lam[i])
                throw std::invalid_argument("boundary label degree mismatch at vertex " +
                                            std::to_string(i + 1));
        auto filter = [&](const std::vector<std::uint32_t>& assignment) {
            if (boundary_of_assignment(g, assignment) == *boundary) sink(assignment);
        };
        LabelingSearch(w, filter).run(0);
    } else {
        LabelingSearch(w, sink).run(0);
    }
}

long long count_consistent_labelings(const WeblikeSubgraph& w, const Label& S) {
    long long count = 0;
    std::function<void(const std::vector<std::uint32_t>&)> sink =
        [&](const std::vector<std::uint32_t>&) { ++count; };
    enumerate_labelings(w, &S, sink);
    return count;
}

std::vector<long long> labeling_counts(const WeblikeSubgraph& w, const LabelSpace& space) {
    std::vector<long long> table(space.size(), 0);
    const auto& g = *w.graph;
    std::function<void(const std::vector<std::uint32_t>&)> sink =
        [&](const std::vector<std::uint32_t>& assignment) {
            table[space.index(boundary_of_assignment(g, assignment))]++;
        };
    enumerate_labelings(w, nullptr, sink);
    return table;
}

Invariant bold_value_table(const WeblikeSubgraph& w, std::shared_ptr<const LabelSpace> space) {
    auto counts = labeling_counts(w, *space);
    Invariant x(space);
    for (size_t t = 0; t < counts.size(); ++t)
        if (counts[t] != 0)
            x.values[t] = MultiPoly(Rational(static_cast<long>(sign_of_boundary(space->labels[t]) * counts[t])));
    return x;
}

Invariant bold_value_table(const WeblikeSubgraph& w) {
    auto lam = w.degree();
    int k = w.graph->excedance();
    return bold_value_table(w, LabelSpace::make(w.r, k, lam));
}

std::vector<Label> enumerate_boundary_labels(int r, int k, const std::vector<int>& lambda) {
    return LabelSpace::make(r, k, lambda)->labels;
}

}  // namespace webdimer
