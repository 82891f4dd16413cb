#include "doctest.h"
#include "webdimer/fixtures.hpp"
#include "webdimer/topcell.hpp"
#include "webdimer/weblike.hpp"

using namespace webdimer;

namespace {
Label word(const std::vector<int>& colors) {
    Label S;
    for (int c : colors) S.push_back(1u << (c - 1));
    return S;
}
}  // namespace

TEST_CASE("the square network has 3 weblike subgraphs at r=3 and 2 after the move") {
    Network nw = square_network_symbolic();
    auto webs = enumerate_weblike(nw.g, 3, std::vector<int>(6, 1));
    REQUIRE(webs.size() == 3);
    std::vector<MultiPoly> wts;
    for (const auto& w : webs) {
        CHECK(w.valid());
        CHECK(w.degree() == std::vector<int>(6, 1));
        wts.push_back(w.weight(nw.weights));
    }
    CHECK(std::count(wts.begin(), wts.end(), MultiPoly::parse("a*b*c*d*e*f")) == 1);
    CHECK(std::count(wts.begin(), wts.end(), MultiPoly::parse("a^2*c^2*e*f")) == 1);
    CHECK(std::count(wts.begin(), wts.end(), MultiPoly::parse("b^2*d^2*e*f")) == 1);

    Network moved = square_network_moved_symbolic();
    auto webs2 = enumerate_weblike(moved.g, 3, std::vector<int>(6, 1));
    REQUIRE(webs2.size() == 2);
    std::vector<MultiPoly> wts2;
    for (const auto& w : webs2) wts2.push_back(w.weight(moved.weights));
    CHECK(std::count(wts2.begin(), wts2.end(), MultiPoly::parse("a'*c'*e*f")) == 1);
    CHECK(std::count(wts2.begin(), wts2.end(), MultiPoly::parse("b'*d'*e*f")) == 1);
}

TEST_CASE("r=1 weblike subgraphs are matchings with the given boundary") {
    PlanarBipartiteGraph g = top_cell_graph(2, 4);
    auto matchings = enumerate_matchings(g);
    for (const auto& I : k_subsets(4, 2)) {
        std::vector<int> lambda(4, 0);
        for (int i : I) lambda[i - 1] = 1;
        auto webs = enumerate_weblike(g, 1, lambda);
        size_t expect = 0;
        for (const auto& m : matchings)
            if (m.boundary == I) expect++;
        CHECK(webs.size() == expect);
    }
}

TEST_CASE("superposition of matchings") {
    PlanarBipartiteGraph g = top_cell_graph(2, 4);
    auto ms = enumerate_matchings(g);
    // r copies of one matching: multiplicities in {0, r}
    WeblikeSubgraph w = superpose(g, {ms[0], ms[0], ms[0]});
    CHECK(w.r == 3);
    CHECK(w.valid());
    for (int m : w.mult) CHECK((m == 0 || m == 3));
    // r = 1 is the matching itself
    WeblikeSubgraph w1 = superpose(g, {ms[0]});
    for (size_t e = 0; e < g.edges.size(); ++e) {
        bool in = std::find(ms[0].edges.begin(), ms[0].edges.end(), static_cast<int>(e)) !=
                  ms[0].edges.end();
        CHECK(w1.mult[e] == (in ? 1 : 0));
    }
    // two disjoint-boundary matchings: degree sums to 4
    for (const auto& m1 : ms)
        for (const auto& m2 : ms) {
            Subset inter;
            std::set_intersection(m1.boundary.begin(), m1.boundary.end(), m2.boundary.begin(),
                                  m2.boundary.end(), std::back_inserter(inter));
            if (!inter.empty()) continue;
            WeblikeSubgraph w2 = superpose(g, {m1, m2});
            int sum = 0;
            for (int x : w2.degree()) sum += x;
            CHECK(sum == 4);
            CHECK(w2.valid());
        }
}

TEST_CASE("consistent labeling counts") {
    // three disjoint arcs (12)(34)(56), r=2: alternating colors force one labeling
    PlanarBipartiteGraph g = tripod_graph(6, {{1, 2}, {3, 4}, {5, 6}});
    // tripod_graph with pairs gives bivalent whites: 2-weblike with all ones
    auto webs = enumerate_weblike(g, 2, std::vector<int>(6, 1));
    REQUIRE(webs.size() == 1);
    CHECK(count_consistent_labelings(webs[0], word({1, 2, 1, 2, 1, 2})) == 1);
    CHECK(count_consistent_labelings(webs[0], word({1, 1, 1, 2, 2, 2})) == 0);
    CHECK_THROWS(count_consistent_labelings(webs[0], Label{3u, 0u, 1u, 2u, 1u, 2u}));
    // unconstrained count = sum over labels
    auto space = LabelSpace::make(2, 3, std::vector<int>(6, 1));
    auto counts = labeling_counts(webs[0], *space);
    long long total = 0;
    for (long long c : counts) total += c;
    CHECK(total == 8);  // 2^3 independent arc colorings
}

TEST_CASE("bold value table signs") {
    PlanarBipartiteGraph g = tripod_graph(6, {{1, 2}, {3, 4}, {5, 6}});
    auto webs = enumerate_weblike(g, 2, std::vector<int>(6, 1));
    Invariant x = bold_value_table(webs[0]);
    CHECK(x.at(word({1, 2, 1, 2, 1, 2})) == MultiPoly(Rational(-1)));  // 3 inversions
    CHECK(x.at(word({1, 2, 2, 1, 1, 2})) == MultiPoly(Rational(1)));
    CHECK(x.at(word({1, 1, 1, 2, 2, 2})).is_zero());
}

TEST_CASE("color permutation invariance of labeling counts") {
    Network nw = square_network_symbolic();
    auto webs = enumerate_weblike(nw.g, 3, std::vector<int>(6, 1));
    auto space = LabelSpace::make(3, 2, std::vector<int>(6, 1));
    for (const auto& w : webs) {
        for (const auto& S : space->labels) {
            // swap colors 1 and 2 everywhere
            Label T = S;
            for (auto& m : T) {
                std::uint32_t b1 = m & 1u, b2 = (m >> 1) & 1u;
                m = (m & ~3u) | (b1 << 1) | b2;
            }
            CHECK(count_consistent_labelings(w, S) == count_consistent_labelings(w, T));
        }
    }
}

TEST_CASE("partition property: products of measurements group by superposition") {
    // sum over r-tuples of matchings with boundaries (I_1..I_r) of weight
    // products equals sum over weblike subgraphs of a(S;W) wt(W)
    Rng rng(67);
    Network nw = random_network(square_network_symbolic().g, rng);
    int r = 3;
    auto space = LabelSpace::make(r, 2, std::vector<int>(6, 1));
    auto matchings = enumerate_matchings(nw.g);
    auto webs = enumerate_weblike(nw.g, r, std::vector<int>(6, 1));
    for (const auto& S : space->labels) {
        auto I = label_to_locations(S, r);
        // left side: ordered r-tuples
        Rational lhs(0);
        std::function<void(int, Rational, std::vector<const Matching*>&)> rec =
            [&](int c, Rational acc, std::vector<const Matching*>& picked) {
                if (c == r) {
                    lhs += acc;
                    return;
                }
                for (const auto& m : matchings) {
                    if (m.boundary != I[c]) continue;
                    Rational wt(1);
                    for (int e : m.edges) wt *= nw.weights[e].constant_value();
                    picked.push_back(&m);
                    rec(c + 1, acc * wt, picked);
                    picked.pop_back();
                }
            };
        std::vector<const Matching*> picked;
        rec(0, Rational(1), picked);
        Rational rhs(0);
        for (const auto& w : webs)
            rhs += from_ll(count_consistent_labelings(w, S)) *
                   w.weight(nw.weights).constant_value();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("per-label counts sum to the unconstrained labeling total") {
    Network nw = square_network_symbolic();
    auto space = LabelSpace::make(3, 2, std::vector<int>(6, 1));
    for (const auto& w : enumerate_weblike(nw.g, 3, std::vector<int>(6, 1))) {
        long long by_bucket = 0;
        for (long long c : labeling_counts(w, *space)) by_bucket += c;
        long long one_by_one = 0;
        for (const auto& S : space->labels) one_by_one += count_consistent_labelings(w, S);
        CHECK(by_bucket == one_by_one);
    }
}
