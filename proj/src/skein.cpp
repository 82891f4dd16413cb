#include "webdimer/skein.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace webdimer {

long long gbinom(long long m, long long t) {
    if (t < 0) return 0;
    if (m >= 0) {
        if (t > m) return 0;
        long long out = 1;
        for (long long i = 0; i < t; ++i) out = out * (m - i) / (i + 1);
        return out;
    }
    long long out = gbinom(t - m - 1, t);
    return (t % 2 == 0) ? out : -out;
}

bool FragmentScenario::admissible() const {
    if (r < 1) return false;
    int lo = std::max({0, v - l, v + j - r});
    int hi = std::min(j, r - l);
    if (!(lo <= s && s <= hi)) return false;
    for (int m : {j - s, r - l - s, v, s, r - j, l - v + s, j, l, r + v - s - l, r + s - v - j})
        if (m < 0 || m > r) return false;
    return true;
}

std::vector<FragmentScenario> all_square_scenarios(int r) {
    std::vector<FragmentScenario> out;
    for (int j = 0; j <= r; ++j)
        for (int l = 0; l <= r; ++l)
            for (int v = 0; v <= r; ++v)
                for (int s = 0; s <= r; ++s) {
                    FragmentScenario sc{r, j, l, v, s};
                    if (sc.admissible()) out.push_back(sc);
                }
    return out;
}

namespace {

// Closed ambient: four regions southwest, southeast, northeast, northwest
// with outside multiplicities out[0..3]; attach_white[i] names the fragment
// white serving region i. closure_variant 1 splits each leg across two
// boundary vertices.
struct Closure {
    GraphBuilder gb;
    std::vector<int> mult;  // parallel to edge insertion order
    std::vector<int> lambda;
    int next_boundary = 1;

    void add_edge(const std::string& id, const std::string& a, const std::string& b, int m) {
        gb.edge(id, a, b);
        mult.push_back(m);
    }
    void attach(const std::string& white, int out_mult, double x, double y, int variant) {
        if (variant == 0) {
            std::string b = "bdy" + std::to_string(next_boundary);
            gb.vertex(b, true, next_boundary, x, y);
            add_edge("lg" + std::to_string(next_boundary), b, white, out_mult);
            lambda.push_back(out_mult);
            next_boundary++;
        } else {
            // split the leg over two boundary vertices, offset perpendicular
            // to the outward direction so rotations stay unambiguous
            double wx = 0, wy = 0;
            for (const auto& vv : gb.vs)
                if (vv.id == white) {
                    wx = vv.x;
                    wy = vv.y;
                }
            double dx = x - wx, dy = y - wy;
            double len = std::sqrt(dx * dx + dy * dy);
            double px = -dy / len * 0.4, py = dx / len * 0.4;
            int m1 = (out_mult + 1) / 2, m2 = out_mult / 2;
            int sgn = 1;
            for (int m : {m1, m2}) {
                std::string b = "bdy" + std::to_string(next_boundary);
                gb.vertex(b, true, next_boundary, x + sgn * px, y + sgn * py);
                add_edge("lg" + std::to_string(next_boundary), b, white, m);
                lambda.push_back(m);
                next_boundary++;
                sgn = -sgn;
            }
        }
    }
};

Invariant closed_table(Closure& c, int r, std::shared_ptr<const LabelSpace>& space) {
    PlanarBipartiteGraph g = c.gb.graph(c.next_boundary - 1);
    WeblikeSubgraph w;
    w.graph = &g;
    w.r = r;
    // GraphBuilder preserves edge insertion order
    w.mult = c.mult;
    if (!w.valid()) throw std::logic_error("skein closure: invalid weblike subgraph");
    if (!space) space = LabelSpace::make(r, g.excedance(), w.degree());
    return bold_value_table(w, space);
}

}  // namespace

Report square_move_identity(const FragmentScenario& sc, int closure_variant) {
    Report rep;
    if (!sc.admissible()) {
        rep.add("square move", false, "inadmissible scenario");
        return rep;
    }
    int r = sc.r, j = sc.j, l = sc.l, v = sc.v, s = sc.s;
    std::shared_ptr<const LabelSpace> space;

    // left fragment: blacks at SW and NE of the square
    Invariant left = [&] {
        Closure c;
        c.gb.vertex("bsw", true, 0, 0, 0);
        c.gb.vertex("bne", true, 0, 2, 2);
        c.gb.vertex("wnw", false, 0, 0, 2);
        c.gb.vertex("wse", false, 0, 2, 0);
        c.gb.vertex("wsw", false, 0, -1, -1);  // leg whites
        c.gb.vertex("wne", false, 0, 3, 3);
        c.add_edge("eL", "wnw", "bsw", j - s);
        c.add_edge("eT", "wnw", "bne", v);
        c.add_edge("eR", "wse", "bne", r - l - s);
        c.add_edge("eB", "wse", "bsw", s);
        c.add_edge("eSW", "bsw", "wsw", r - j);
        c.add_edge("eNE", "bne", "wne", l - v + s);
        c.attach("wsw", j, -2, -2, closure_variant);
        c.attach("wse", l, 4, -2, closure_variant);
        c.attach("wne", r + v - s - l, 4, 4, closure_variant);
        c.attach("wnw", r + s - v - j, -2, 4, closure_variant);
        return closed_table(c, r, space);
    }();

    Invariant rhs(space);
    int m = j - l + v - s;
    for (int t = 0; t <= r; ++t) {
        bool ok = true;
        for (int mm : {r - j - v + t, l - v + t, s - t, v - t, r - l, v + j - s})
            if (mm < 0 || mm > r) ok = false;
        if (!ok) continue;
        long long coef = gbinom(m, t);
        if (coef == 0) continue;
        Closure c;
        c.gb.vertex("bnw", true, 0, 0, 2);
        c.gb.vertex("bse", true, 0, 2, 0);
        c.gb.vertex("wsw", false, 0, 0, 0);
        c.gb.vertex("wne", false, 0, 2, 2);
        c.gb.vertex("wse2", false, 0, 3, -1);  // leg whites
        c.gb.vertex("wnw2", false, 0, -1, 3);
        c.add_edge("eL", "wsw", "bnw", r - j - v + t);
        c.add_edge("eT", "wne", "bnw", s - t);
        c.add_edge("eR", "wne", "bse", l - v + t);
        c.add_edge("eB", "wsw", "bse", v - t);
        c.add_edge("eSE", "bse", "wse2", r - l);
        c.add_edge("eNW", "bnw", "wnw2", v + j - s);
        c.attach("wsw", j, -2, -2, closure_variant);
        c.attach("wse2", l, 4, -2, closure_variant);
        c.attach("wne", r + v - s - l, 4, 4, closure_variant);
        c.attach("wnw2", r + s - v - j, -2, 4, closure_variant);
        rhs += MultiPoly::constant(coef) * closed_table(c, r, space);
    }
    std::ostringstream name;
    name << "square r=" << r << " (j,l,v,s)=(" << j << "," << l << "," << v << "," << s << ")";
    if (left == rhs) {
        rep.add(name.str(), true);
    } else {
        rep.add(name.str(), false, "tablewise mismatch");
    }
    return rep;
}

Report bigon_identity(int r, int a, int b) {
    Report rep;
    std::ostringstream name;
    name << "bigon r=" << r << " a=" << a << " b=" << b;
    if (a < 0 || b < 0 || a + b > r) {
        rep.add(name.str(), false, "range violation: need a+b <= r");
        return rep;
    }
    // manual construction: parallel edges need explicit rotations
    auto build = [&](bool merged) {
        PlanarBipartiteGraph g;
        g.n = 2;
        g.vertices = {{"B", true, 0}, {"W", false, 0}, {"LW", false, 0},
                      {"bdy1", true, 1}, {"bdy2", true, 2}};
        std::vector<int> mult;
        if (merged) {
            g.edges = {{"e", 0, 1}, {"leg", 0, 2}, {"g1", 2, 3}, {"g2", 1, 4}};
            mult = {a + b, r - a - b, a + b, r - a - b};
            g.rotation = {{0, 1}, {0, 3}, {1, 2}, {2}, {3}};
        } else {
            g.edges = {{"e1", 0, 1}, {"e2", 0, 1}, {"leg", 0, 2}, {"g1", 2, 3}, {"g2", 1, 4}};
            mult = {a, b, r - a - b, a + b, r - a - b};
            // empty bigon: e1 before e2 at B, e2 before e1 at W
            g.rotation = {{0, 1, 2}, {1, 0, 4}, {2, 3}, {3}, {4}};
        }
        auto bad = g.validate();
        if (!bad.empty()) throw std::logic_error("bigon graph invalid: " + bad.front());
        WeblikeSubgraph w;
        w.graph = nullptr;
        w.r = r;
        w.mult = mult;
        return std::pair{g, w};
    };
    auto [g1, w1] = build(false);
    w1.graph = &g1;
    auto [g2, w2] = build(true);
    w2.graph = &g2;
    auto space = LabelSpace::make(r, 1, w1.degree());
    Invariant lhs = bold_value_table(w1, space);
    Invariant rhs = MultiPoly::constant(gbinom(a + b, b)) * bold_value_table(w2, space);
    rep.add(name.str(), lhs == rhs, lhs == rhs ? "" : "tablewise mismatch");
    return rep;
}

Report bivalent_identity(int r, int a) {
    Report rep;
    std::ostringstream name;
    name << "bivalent r=" << r << " a=" << a;
    if (a < 0 || a > r) {
        rep.add(name.str(), false, "range violation");
        return rep;
    }
    int x1 = (r - a + 1) / 2, x2 = (r - a) - x1;
    int y1 = (a + 1) / 2, y2 = a - y1;
    auto build = [&](bool merged) {
        GraphBuilder gb;
        std::vector<int> mult;
        auto E = [&](const std::string& id, const std::string& u, const std::string& v, int m) {
            gb.edge(id, u, v);
            mult.push_back(m);
        };
        if (merged) {
            gb.vertex("B", true, 0, 1, 0);
        } else {
            gb.vertex("B", true, 0, 0, 0);
            gb.vertex("V", false, 0, 1, 0);
            gb.vertex("B2", true, 0, 2, 0);
        }
        gb.vertex("p1", false, 0, -1, 0.5);
        gb.vertex("p2", false, 0, -1, -0.5);
        gb.vertex("p3", false, 0, 3, -0.5);
        gb.vertex("p4", false, 0, 3, 0.5);
        gb.vertex("bdy1", true, 1, 4, 1.5);    // ccw: ne, nw, sw, se
        gb.vertex("bdy2", true, 2, -2, 1.5);
        gb.vertex("bdy3", true, 3, -2, -1.5);
        gb.vertex("bdy4", true, 4, 4, -1.5);
        if (!merged) {
            E("m1", "B", "V", a);
            E("m2", "V", "B2", r - a);
        }
        E("l1", "B", "p1", x1);
        E("l2", "B", "p2", x2);
        E("l3", merged ? "B" : "B2", "p3", y1);
        E("l4", merged ? "B" : "B2", "p4", y2);
        E("g4", "p4", "bdy1", r - y2);
        E("g1", "p1", "bdy2", r - x1);
        E("g2", "p2", "bdy3", r - x2);
        E("g3", "p3", "bdy4", r - y1);
        PlanarBipartiteGraph g = gb.graph(4);
        WeblikeSubgraph w;
        w.graph = nullptr;
        w.r = r;
        // reorder mult to edge order used by the builder (same order)
        w.mult = mult;
        return std::pair{g, w};
    };
    auto [g1, w1] = build(false);
    w1.graph = &g1;
    auto [g2, w2] = build(true);
    w2.graph = &g2;
    auto space = LabelSpace::make(r, w1.graph->excedance(), w1.degree());
    Invariant lhs = bold_value_table(w1, space);
    Invariant rhs = bold_value_table(w2, space);
    rep.add(name.str(), lhs == rhs, lhs == rhs ? "" : "tablewise mismatch");
    return rep;
}

Report tag_relation_checks(int r) {
    Report rep;
    if (r < 2) {
        rep.add("tag relations", false, "needs r >= 2");
        return rep;
    }
    // tag switch on the two-vertex web: boundary grades (a, r-a)
    for (int a = 1; a < r; ++a) {
        GraphBuilder gb;
        gb.vertex("w", false, 0, 0, 0);
        gb.vertex("bdy1", true, 1, 1, -1);
        gb.vertex("bdy2", true, 2, -1, 1);
        gb.edge("e1", "bdy1", "w");
        gb.edge("e2", "bdy2", "w");
        PlanarBipartiteGraph g = gb.graph(2);
        WeblikeSubgraph w{&g, r, {a, r - a}};
        Matching pi;
        pi.edges = {0};
        pi.boundary = {1};
        OrientedTagging t = tag_from_matching(w, pi);
        OrientedTagging flipped = t;
        bool found = false;
        for (auto& tag : flipped.tags)
            if (tag.pair_kind) {
                tag.left = !tag.left;
                found = true;
                break;
            }
        if (!found) {
            rep.add("tag switch", false, "no pair tag to flip");
            continue;
        }
        TaggedWeb wa = build_tagged_web(t), wb = build_tagged_web(flipped);
        auto space = LabelSpace::make(r, 1, w.degree());
        int expo = a * (r - a);
        Rational factor((expo % 2 == 0) ? 1 : -1);
        bool ok = true;
        for (const auto& S : space->labels)
            if (evaluate_tagged(wa, S) != factor * evaluate_tagged(wb, S)) ok = false;
        std::ostringstream name;
        name << "tag switch r=" << r << " a=" << a;
        rep.add(name.str(), ok, ok ? "" : "factor (-1)^{a(r-a)} violated");
    }
    // tag migration: moving the pair tag across a wedge leaves values fixed:
    // <(x ^ y), z> against <x, (y ^ z)> for all grade splits
    for (int a = 1; a < r; ++a)
        for (int b = 1; a + b < r; ++b) {
            int c = r - a - b;
            TaggedWeb A;
            A.r = r;
            A.n = 3;
            A.lambda = {a, b, c};
            int A1 = A.add_node(TagNodeKind::Boundary, "1", 1);
            int A2 = A.add_node(TagNodeKind::Boundary, "2", 2);
            int A3 = A.add_node(TagNodeKind::Boundary, "3", 3);
            int AW = A.add_node(TagNodeKind::Wedge, "w");
            int AP = A.add_node(TagNodeKind::Pair, "p");
            A.arc_between(A1, AW, a);
            A.arc_between(A2, AW, b);
            A.arc_between(AW, AP, a + b);
            A.arc_between(A3, AP, c);
            TaggedWeb B;
            B.r = r;
            B.n = 3;
            B.lambda = {a, b, c};
            int B1 = B.add_node(TagNodeKind::Boundary, "1", 1);
            int B2 = B.add_node(TagNodeKind::Boundary, "2", 2);
            int B3 = B.add_node(TagNodeKind::Boundary, "3", 3);
            int BW = B.add_node(TagNodeKind::Wedge, "w");
            int BP = B.add_node(TagNodeKind::Pair, "p");
            B.arc_between(B1, BP, a);
            B.arc_between(B2, BW, b);
            B.arc_between(B3, BW, c);
            B.arc_between(BW, BP, b + c);
            auto space = LabelSpace::make(r, 1, {a, b, c});
            bool ok = true;
            for (const auto& S : space->labels)
                if (evaluate_tagged(A, S) != evaluate_tagged(B, S)) ok = false;
            std::ostringstream name;
            name << "tag migration r=" << r << " grades (" << a << "," << b << "," << c << ")";
            rep.add(name.str(), ok, ok ? "" : "migration changed values");
        }
    return rep;
}

}  // namespace webdimer
