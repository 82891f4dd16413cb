#include "webdimer/duality.hpp"

#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

#include "webdimer/fixtures.hpp"

namespace webdimer {

int basis_rank(const WebBasis& basis) {
    if (basis.elements.empty()) return 0;
    RowSpace rs(static_cast<int>(basis.elements.front().values.size()));
    for (const auto& x : basis.elements) rs.add(x.rational_row());
    return rs.rank();
}

namespace {

void noncrossing_matchings(const std::vector<int>& points,
                           std::vector<std::vector<std::pair<int, int>>>& out) {
    if (points.empty()) {
        out.push_back({});
        return;
    }
    int a = points.front();
    for (size_t j = 1; j < points.size(); j += 2) {
        std::vector<int> inside(points.begin() + 1, points.begin() + j);
        std::vector<int> outside(points.begin() + j + 1, points.end());
        std::vector<std::vector<std::pair<int, int>>> left, right;
        noncrossing_matchings(inside, left);
        noncrossing_matchings(outside, right);
        for (const auto& L : left)
            for (const auto& R : right) {
                std::vector<std::pair<int, int>> full{{a, points[j]}};
                full.insert(full.end(), L.begin(), L.end());
                full.insert(full.end(), R.begin(), R.end());
                out.push_back(std::move(full));
            }
    }
}

Invariant arc_diagram_invariant(int n, const std::vector<std::pair<int, int>>& arcs,
                                std::shared_ptr<const LabelSpace> space) {
    PlanarBipartiteGraph g;
    g.n = n;
    for (int i = 1; i <= n; ++i) g.vertices.push_back({"bdy" + std::to_string(i), true, i});
    std::vector<int> mult;
    for (size_t a = 0; a < arcs.size(); ++a) {
        g.vertices.push_back({"w" + std::to_string(a), false, 0});
        int w = static_cast<int>(g.vertices.size()) - 1;
        g.edges.push_back({"a" + std::to_string(a) + "L", arcs[a].first - 1, w});
        g.edges.push_back({"a" + std::to_string(a) + "R", arcs[a].second - 1, w});
        mult.push_back(1);
        mult.push_back(1);
    }
    g.rotation.assign(g.vertices.size(), {});
    for (size_t e = 0; e < g.edges.size(); ++e) {
        g.rotation[g.edges[e].u].push_back(static_cast<int>(e));
        g.rotation[g.edges[e].v].push_back(static_cast<int>(e));
    }
    WeblikeSubgraph w{&g, 2, mult};
    return bold_value_table(w, space);
}

}  // namespace

WebBasis crossingless_matchings(int n) {
    if (n % 2 != 0) throw std::invalid_argument("crossingless_matchings: n must be even");
    std::vector<int> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = i + 1;
    std::vector<std::vector<std::pair<int, int>>> diagrams;
    noncrossing_matchings(pts, diagrams);
    WebBasis basis;
    basis.label = "crossingless matchings n=" + std::to_string(n);
    auto space = LabelSpace::make(2, n / 2, std::vector<int>(n, 1));
    for (auto d : diagrams) {
        std::sort(d.begin(), d.end());
        std::string name;
        for (auto [a, b] : d) name += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        basis.names.push_back(name);
        basis.elements.push_back(arc_diagram_invariant(n, d, space));
    }
    return basis;
}

WebBasis sl3_basis_n6() {
    WebBasis basis;
    basis.label = "non-elliptic SL3 webs n=6";
    auto space = LabelSpace::make(3, 2, std::vector<int>(6, 1));
    auto add_tripods = [&](std::vector<int> g1, std::vector<int> g2, const std::string& name) {
        PlanarBipartiteGraph g = tripod_graph(6, {g1, g2});
        auto webs = enumerate_weblike(g, 3, std::vector<int>(6, 1));
        if (webs.size() != 1) throw std::logic_error("tripod web not unique");
        basis.names.push_back(name);
        basis.elements.push_back(bold_value_table(webs[0], space));
    };
    add_tripods({1, 2, 3}, {4, 5, 6}, "tripods 123|456");
    add_tripods({2, 3, 4}, {5, 6, 1}, "tripods 234|561");
    add_tripods({3, 4, 5}, {6, 1, 2}, "tripods 345|612");
    auto add_hexapod = [&](std::vector<std::pair<int, int>> pairs, const std::string& name) {
        GraphBuilder gb;
        for (int i = 1; i <= 6; ++i) {
            double a = 2 * M_PI * (i - 1) / 6;
            gb.vertex("bdy" + std::to_string(i), true, i, 2 * std::cos(a), 2 * std::sin(a));
        }
        gb.vertex("C", true, 0, 0, 0);
        int t = 0;
        for (auto [x, y] : pairs) {
            double ax = 2 * M_PI * (x - 1) / 6, ay = 2 * M_PI * (y - 1) / 6;
            std::string id = "p" + std::to_string(++t);
            gb.vertex(id, false, 0, (std::cos(ax) + std::cos(ay)) / 1.5,
                      (std::sin(ax) + std::sin(ay)) / 1.5);
            gb.edge(id + "x", "bdy" + std::to_string(x), id);
            gb.edge(id + "y", "bdy" + std::to_string(y), id);
            gb.edge(id + "c", id, "C");
        }
        PlanarBipartiteGraph g = gb.graph(6);
        auto webs = enumerate_weblike(g, 3, std::vector<int>(6, 1));
        if (webs.size() != 1) throw std::logic_error("hexapod web not unique");
        basis.names.push_back(name);
        basis.elements.push_back(bold_value_table(webs[0], space));
    };
    add_hexapod({{1, 2}, {3, 4}, {5, 6}}, "hexapod 12|34|56");
    add_hexapod({{2, 3}, {4, 5}, {6, 1}}, "hexapod 23|45|61");
    return basis;
}

PluckerExpression expand_to_plucker_products(const Invariant& x) {
    const auto& sp = *x.space;
    // x is a multilinear invariant in W(k', n) with k' = sp.r colors; as a
    // function on Gr(k', n) it expands over products of sp.k Plucker factors
    int kk = sp.r;   // minor size
    int rr = sp.k;   // number of factors
    for (int lam : sp.lambda)
        if (lam != 1) throw std::invalid_argument("expansion needs a multilinear invariant");
    // spanning multisets: rr-element multisets of kk-subsets of [n] whose
    // multiset union matches the content lambda (all ones here)
    std::vector<std::vector<Subset>> span;
    {
        std::vector<int> left = sp.lambda;
        std::vector<Subset> cur;
        auto all_k = k_subsets(sp.n, kk);
        std::function<void(size_t)> rec = [&](size_t from) {
            if (static_cast<int>(cur.size()) == rr) {
                for (int v : left)
                    if (v != 0) return;
                span.push_back(cur);
                return;
            }
            for (size_t i = from; i < all_k.size(); ++i) {
                bool ok = true;
                for (int j : all_k[i])
                    if (left[j - 1] == 0) ok = false;
                if (!ok) continue;
                for (int j : all_k[i]) left[j - 1]--;
                cur.push_back(all_k[i]);
                rec(i);  // nondecreasing: multisets once
                cur.pop_back();
                for (int j : all_k[i]) left[j - 1]++;
            }
        };
        rec(0);
    }
    // value of det(columns I) on the word s: permutation sign or 0
    auto det_word = [&](const Subset& I, const Label& S) -> int {
        std::vector<int> word;
        std::uint32_t seen_mask = 0;
        for (int j : I) {
            int color = mask_to_subset(S[j - 1])[0];
            if (seen_mask & (1u << (color - 1))) return 0;
            seen_mask |= (1u << (color - 1));
            word.push_back(color);
        }
        return perm_sign(word);
    };
    ExactMatrix A(static_cast<int>(sp.size()), static_cast<int>(span.size()));
    std::vector<Rational> b;
    for (size_t t = 0; t < sp.size(); ++t) {
        for (size_t m = 0; m < span.size(); ++m) {
            int prod = 1;
            for (const auto& I : span[m]) {
                int d = det_word(I, sp.labels[t]);
                if (d == 0) {
                    prod = 0;
                    break;
                }
                prod *= d;
            }
            A.at(static_cast<int>(t), static_cast<int>(m)) = prod;
        }
        b.push_back(x.values[t].constant_value());
    }
    auto sol = matrix_solve(A, b);
    if (!sol) throw std::logic_error("expand_to_plucker_products: inconsistent system");
    PluckerExpression out;
    out.r = rr;
    out.k = kk;
    out.n = sp.n;
    for (size_t m = 0; m < span.size(); ++m)
        if ((*sol)[m] != 0) out.add(span[m], (*sol)[m]);
    return out;
}

ExactMatrix duality_matrix(const WebBasis& A, const WebBasis& B) {
    if (A.elements.empty() || B.elements.empty())
        throw std::invalid_argument("duality_matrix: empty basis");
    int n = A.elements.front().space->n;
    int r = A.elements.front().space->r;
    int k = B.elements.front().space->r;
    if (n != B.elements.front().space->n || k * r != n)
        throw std::invalid_argument("duality_matrix: need bases for W(r,n) and W(k,n), n = kr");
    if (basis_rank(A) != static_cast<int>(A.elements.size()) ||
        basis_rank(B) != static_cast<int>(B.elements.size()))
        throw std::invalid_argument("duality_matrix: basis is rank deficient");
    ExactMatrix M(static_cast<int>(A.elements.size()), static_cast<int>(B.elements.size()));
    for (size_t j = 0; j < B.elements.size(); ++j) {
        PluckerExpression f = expand_to_plucker_products(B.elements[j]);
        for (size_t i = 0; i < A.elements.size(); ++i)
            M.at(static_cast<int>(i), static_cast<int>(j)) = pair_invariant(A.elements[i], f);
    }
    return M;
}

bool check_signed_permutation(const ExactMatrix& m) {
    if (m.rows != m.cols) return false;
    std::vector<int> col_used(m.cols, 0);
    for (int i = 0; i < m.rows; ++i) {
        int nonzero = 0, at = -1;
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) {
                nonzero++;
                at = j;
            }
        if (nonzero != 1) return false;
        if (m.at(i, at) != 1 && m.at(i, at) != -1) return false;
        if (col_used[at]++) return false;
    }
    return true;
}

}  // namespace webdimer
