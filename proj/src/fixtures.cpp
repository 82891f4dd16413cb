#include "webdimer/fixtures.hpp"

#include <cmath>
#include <stdexcept>

namespace webdimer {

Network square_network(const std::vector<MultiPoly>& w) {
    if (w.size() != 6) throw std::invalid_argument("square_network: need 6 weights a..f");
    GraphBuilder gb;
    gb.vertex("bdy1", true, 1, 3.1, 3.1);
    gb.vertex("bdy2", true, 2, -0.8, 3.4);
    gb.vertex("bdy3", true, 3, -1.6, 2.5);
    gb.vertex("bdy4", true, 4, -1.1, -1.1);
    gb.vertex("bdy5", true, 5, 2.8, -1.4);
    gb.vertex("bdy6", true, 6, 3.6, -0.5);
    gb.vertex("BN", true, 0, 0, 2);
    gb.vertex("BS", true, 0, 2, 0);
    gb.vertex("WW", false, 0, 0, 0);
    gb.vertex("WE", false, 0, 2, 2);
    gb.vertex("WA", false, 0, -0.5, 2.5);
    gb.vertex("WC", false, 0, 2.5, -0.5);
    gb.edge("a", "WW", "BN", w[0]);
    gb.edge("b", "WE", "BN", w[1]);
    gb.edge("c", "WE", "BS", w[2]);
    gb.edge("d", "WW", "BS", w[3]);
    gb.edge("e", "WA", "bdy3", w[4]);
    gb.edge("f", "WC", "bdy6", w[5]);
    gb.edge("ga", "WA", "BN");
    gb.edge("gc", "WC", "BS");
    gb.edge("h1", "WE", "bdy1");
    gb.edge("h2", "WA", "bdy2");
    gb.edge("h3", "WW", "bdy4");
    gb.edge("h4", "WC", "bdy5");
    return gb.network(6);
}

Network square_network_symbolic() {
    std::vector<MultiPoly> w;
    for (const char* v : {"a", "b", "c", "d", "e", "f"}) w.push_back(MultiPoly::var(v));
    return square_network(w);
}

std::vector<std::string> square_network_face() { return {"BN", "WW", "BS", "WE"}; }

Network square_network_moved_symbolic() {
    // colors on the square swapped; the old boundary-adjacent whites WA, WC
    // are now square corners, the old corners hang off new leaf edges
    GraphBuilder gb;
    gb.vertex("bdy1", true, 1, 3.1, 3.1);
    gb.vertex("bdy2", true, 2, -0.8, 3.4);
    gb.vertex("bdy3", true, 3, -1.6, 2.5);
    gb.vertex("bdy4", true, 4, -1.1, -1.1);
    gb.vertex("bdy5", true, 5, 2.8, -1.4);
    gb.vertex("bdy6", true, 6, 3.6, -0.5);
    gb.vertex("NB1", true, 0, 0, 0);   // new black at the old WW corner
    gb.vertex("NB2", true, 0, 2, 2);   // new black at the old WE corner
    gb.vertex("WA", false, 0, 0, 2);   // old leaf whites, now corners
    gb.vertex("WC", false, 0, 2, 0);
    gb.vertex("WW", false, 0, -0.6, -0.6);  // old corners, now leaf whites
    gb.vertex("WE", false, 0, 2.6, 2.6);
    // primed square: c' left, d' top, a' right, b' bottom (antipodal layout)
    gb.edge("c'", "WA", "NB1", MultiPoly::var("c'"));
    gb.edge("d'", "WA", "NB2", MultiPoly::var("d'"));
    gb.edge("a'", "WC", "NB2", MultiPoly::var("a'"));
    gb.edge("b'", "WC", "NB1", MultiPoly::var("b'"));
    gb.edge("e", "WA", "bdy3", MultiPoly::var("e"));
    gb.edge("f", "WC", "bdy6", MultiPoly::var("f"));
    gb.edge("ga", "NB1", "WW");
    gb.edge("gc", "NB2", "WE");
    gb.edge("h1", "WE", "bdy1");
    gb.edge("h2", "WA", "bdy2");
    gb.edge("h3", "WW", "bdy4");
    gb.edge("h4", "WC", "bdy5");
    return gb.network(6);
}

PlanarBipartiteGraph claw_graph() {
    GraphBuilder gb;
    auto at = [](double deg, double rad) {
        return std::pair{rad * std::cos(deg * M_PI / 180), rad * std::sin(deg * M_PI / 180)};
    };
    int idx = 1;
    for (double deg : {95.0, 145.0, 190.0, 235.0, 280.0, 325.0, 5.0, 50.0}) {
        auto [x, y] = at(deg, 2.0);
        gb.vertex("bdy" + std::to_string(idx), true, idx, x, y);
        ++idx;
    }
    gb.vertex("C", true, 0, 0, 0);
    auto [xe, ye] = at(15, 1);
    gb.vertex("WE", false, 0, xe, ye);
    auto [xn, yn] = at(135, 1);
    gb.vertex("WNW", false, 0, xn, yn);
    auto [xs, ys] = at(250, 1);
    gb.vertex("WSW", false, 0, xs, ys);
    gb.edge("cE", "C", "WE");
    gb.edge("cNW", "WNW", "C");
    gb.edge("cSW", "C", "WSW");
    gb.edge("b1", "bdy1", "WNW");
    gb.edge("b2", "bdy2", "WNW");
    gb.edge("b3", "bdy3", "WNW");
    gb.edge("b4", "bdy4", "WSW");
    gb.edge("b5", "bdy5", "WSW");
    gb.edge("b6", "WSW", "bdy6");
    gb.edge("b7", "bdy7", "WE");
    gb.edge("b8", "WE", "bdy8");
    return gb.graph(8);
}

std::vector<int> claw_weblike_mult(const PlanarBipartiteGraph& g) {
    std::vector<int> mult(g.edges.size(), 1);
    mult[g.edge_index("cE")] = 2;
    return mult;
}

std::vector<int> claw_matching_edges(const PlanarBipartiteGraph& g) {
    return {g.edge_index("cNW"), g.edge_index("b6"), g.edge_index("b8")};
}

PlanarBipartiteGraph tripod_graph(int n, const std::vector<std::vector<int>>& groups) {
    GraphBuilder gb;
    for (int i = 1; i <= n; ++i) {
        double a = 2 * M_PI * (i - 1) / n;
        gb.vertex("bdy" + std::to_string(i), true, i, 2 * std::cos(a), 2 * std::sin(a));
    }
    int t = 0;
    for (const auto& grp : groups) {
        double cx = 0, cy = 0;
        for (int i : grp) {
            double a = 2 * M_PI * (i - 1) / n;
            cx += std::cos(a);
            cy += std::sin(a);
        }
        cx /= grp.size();
        cy /= grp.size();
        std::string id = "w" + std::to_string(++t);
        gb.vertex(id, false, 0, cx, cy);
        for (int i : grp)
            gb.edge("t" + std::to_string(t) + "_" + std::to_string(i), "bdy" + std::to_string(i),
                    id);
    }
    return gb.graph(n);
}

PlanarBipartiteGraph single_cycle_web_graph() {
    GraphBuilder gb;
    int n = 9;
    auto deg2xy = [](double deg, double rad) {
        return std::pair{rad * std::cos(deg * M_PI / 180), rad * std::sin(deg * M_PI / 180)};
    };
    for (int i = 1; i <= n; ++i) {
        auto [x, y] = deg2xy(40.0 * (i - 1), 3.0);
        gb.vertex("bdy" + std::to_string(i), true, i, x, y);
    }
    // hexagon whites sit at boundary 1, 4, 7; blacks between them
    auto hex = [&](const std::string& id, bool black, double angle) {
        auto [x, y] = deg2xy(angle, 1.0);
        gb.vertex(id, black, 0, x, y);
    };
    hex("H1", false, 0);
    hex("B1", true, 60);
    hex("H2", false, 120);
    hex("B2", true, 180);
    hex("H3", false, 240);
    hex("B3", true, 300);
    gb.edge("c1", "H1", "B1");
    gb.edge("c2", "B1", "H2");
    gb.edge("c3", "H2", "B2");
    gb.edge("c4", "B2", "H3");
    gb.edge("c5", "H3", "B3");
    gb.edge("c6", "B3", "H1");
    gb.edge("m1", "H1", "bdy1");
    gb.edge("m2", "H2", "bdy4");
    gb.edge("m3", "H3", "bdy7");
    // bipods: P1 serves {2,3} via B1, P2 serves {5,6} via B2, P3 serves {8,9}
    for (auto [id, angle] : {std::pair{"P1", 60.0}, {"P2", 180.0}, {"P3", 300.0}}) {
        auto [x, y] = deg2xy(angle, 2.0);
        gb.vertex(id, false, 0, x, y);
    }
    gb.edge("p1", "B1", "P1");
    gb.edge("p2", "B2", "P2");
    gb.edge("p3", "B3", "P3");
    gb.edge("q2", "P1", "bdy2");
    gb.edge("q3", "P1", "bdy3");
    gb.edge("q5", "P2", "bdy5");
    gb.edge("q6", "P2", "bdy6");
    gb.edge("q8", "P3", "bdy8");
    gb.edge("q9", "P3", "bdy9");
    return gb.graph(9);
}

Network unit_network(const PlanarBipartiteGraph& g) {
    return {g, std::vector<MultiPoly>(g.edges.size(), MultiPoly::constant(1))};
}

Network random_network(const PlanarBipartiteGraph& g, Rng& rng) {
    Network nw{g, {}};
    for (size_t e = 0; e < g.edges.size(); ++e) nw.weights.push_back(MultiPoly(rng.rational()));
    return nw;
}

}  // namespace webdimer
