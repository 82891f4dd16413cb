#include "doctest.h"
#include "webdimer/fixtures.hpp"
#include "webdimer/tagged.hpp"
#include "webdimer/topcell.hpp"

using namespace webdimer;

namespace {
Label word(const std::vector<int>& colors) {
    Label S;
    for (int c : colors) S.push_back(1u << (c - 1));
    return S;
}
}  // namespace

TEST_CASE("the SL4 web evaluates to -1 on the pinned tensor") {
    PlanarBipartiteGraph g = claw_graph();
    WeblikeSubgraph w{&g, 4, claw_weblike_mult(g)};
    REQUIRE(w.valid());
    Matching pi;
    pi.edges = claw_matching_edges(g);
    std::sort(pi.edges.begin(), pi.edges.end());
    pi.boundary = {6, 8};
    OrientedTagging t = tag_from_matching(w, pi);
    // two pair tags, at the boundary sinks 6 and 8
    REQUIRE(t.tags.size() == 2);
    for (const auto& tag : t.tags) {
        CHECK(tag.pair_kind);
        int other = g.vertices[g.edges[tag.edge].u].boundary +
                    g.vertices[g.edges[tag.edge].v].boundary;
        CHECK((other == 6 || other == 8));
    }
    TaggedWeb web = build_tagged_web(t);
    CHECK(evaluate_tagged(web, word({1, 2, 3, 4, 3, 2, 1, 4})) == -1);
    // color conservation: wrong multiset gives 0
    CHECK(evaluate_tagged(web, word({1, 2, 3, 4, 3, 2, 1, 3})) == 0);
    // degree mismatch rejected
    CHECK_THROWS(evaluate_tagged(web, Label{3u, 1u, 2u, 4u, 8u, 4u, 2u, 1u}));
}

TEST_CASE("extract_sign on the SL4 web combines to +1") {
    // sign(S) = -1 and eval = -1 at the pinned label, a = 1, so sign(W,O) = +1
    PlanarBipartiteGraph g = claw_graph();
    WeblikeSubgraph w{&g, 4, claw_weblike_mult(g)};
    Matching pi;
    pi.edges = claw_matching_edges(g);
    std::sort(pi.edges.begin(), pi.edges.end());
    OrientedTagging t = tag_from_matching(w, pi);
    CHECK(extract_sign(w, t) == 1);
    CHECK(count_consistent_labelings(w, word({1, 2, 3, 4, 3, 2, 1, 4})) == 1);
}

TEST_CASE("r=1 star tagging is acyclic and evaluates to +1") {
    PlanarBipartiteGraph g = top_cell_graph(1, 3);
    auto ms = enumerate_matchings(g);
    for (const auto& pi : ms) {
        std::vector<int> lambda(3, 0);
        lambda[pi.boundary[0] - 1] = 1;
        WeblikeSubgraph w{&g, 1, {}};
        w.mult.assign(g.edges.size(), 0);
        for (int e : pi.edges) w.mult[e] = 1;
        OrientedTagging t = tag_from_matching(w, pi);
        CHECK(extract_sign(w, t) == 1);
    }
}

TEST_CASE("coherence holds for all weblike subgraphs of small graphs") {
    // the square network graph at r = 3, a couple of taggings each
    Network nw = square_network_symbolic();
    auto matchings = enumerate_matchings(nw.g);
    for (const auto& w : enumerate_weblike(nw.g, 3, std::vector<int>(6, 1))) {
        int used = 0;
        for (const auto& pi : matchings) {
            bool supported = true;
            for (int e : pi.edges)
                if (w.mult[e] == 0) supported = false;
            if (!supported) continue;
            Report rep = coherence_check(w, tag_from_matching(w, pi));
            CHECK(rep.all_pass());
            if (++used == 2) break;
        }
        CHECK(used >= 1);
    }
}

TEST_CASE("two taggings differ by a global sign only") {
    Network nw = square_network_symbolic();
    auto matchings = enumerate_matchings(nw.g);
    auto space = LabelSpace::make(3, 2, std::vector<int>(6, 1));
    for (const auto& w : enumerate_weblike(nw.g, 3, std::vector<int>(6, 1))) {
        std::vector<OrientedTagging> ts;
        for (const auto& pi : matchings) {
            bool supported = true;
            for (int e : pi.edges)
                if (w.mult[e] == 0) supported = false;
            if (supported) ts.push_back(tag_from_matching(w, pi));
            if (ts.size() == 2) break;
        }
        if (ts.size() < 2) continue;
        TaggedWeb wa = build_tagged_web(ts[0]), wb = build_tagged_web(ts[1]);
        int sa = extract_sign(w, ts[0]), sb = extract_sign(w, ts[1]);
        for (const auto& S : space->labels)
            CHECK(Rational(sa) * evaluate_tagged(wa, S) == Rational(sb) * evaluate_tagged(wb, S));
    }
}

TEST_CASE("a cycle in the orientation gets cut by one cap-cup pair") {
    // hexagon web: orient so the inner cycle survives, forcing a cut
    PlanarBipartiteGraph g = single_cycle_web_graph();
    auto webs = enumerate_weblike(g, 3, std::vector<int>(9, 1));
    const WeblikeSubgraph* cycle = nullptr;
    for (const auto& w : webs) {
        bool all_one = true;
        for (int m : w.mult)
            if (m != 1) all_one = false;
        if (all_one) cycle = &w;
    }
    REQUIRE(cycle);
    // find a matching whose support orientation leaves the hexagon directed:
    // take the matching using the three hexagon edges c1, c3, c5
    Matching pi;
    for (const char* id : {"c1", "c3", "c5", "q2", "q5", "q8"})
        pi.edges.push_back(g.edge_index(id));
    std::sort(pi.edges.begin(), pi.edges.end());
    pi.boundary = {2, 5, 8};
    OrientedTagging t = tag_from_matching(*cycle, pi);
    int pair_tags = 0, source_tags = 0;
    for (const auto& tag : t.tags) (tag.pair_kind ? pair_tags : source_tags)++;
    CHECK(source_tags == 1);        // exactly one cap-cup inserted
    CHECK(pair_tags == 3 + 1);      // three boundary sinks plus the cut
    CHECK(coherence_check(*cycle, t).all_pass());
}

TEST_CASE("tagged webs on the moved square network cohere too") {
    Network moved = square_network_moved_symbolic();
    auto matchings = enumerate_matchings(moved.g);
    for (const auto& w : enumerate_weblike(moved.g, 3, std::vector<int>(6, 1))) {
        for (const auto& pi : matchings) {
            bool supported = true;
            for (int e : pi.edges)
                if (w.mult[e] == 0) supported = false;
            if (!supported) continue;
            CHECK(coherence_check(w, tag_from_matching(w, pi)).all_pass());
            break;
        }
    }
}

TEST_CASE("multilinearity: evaluation on rational vectors expands over basis labels") {
    PlanarBipartiteGraph g = tripod_graph(6, {{1, 2}, {3, 4}, {5, 6}});
    auto webs = enumerate_weblike(g, 2, std::vector<int>(6, 1));
    auto ms = enumerate_matchings(g);
    OrientedTagging t = tag_from_matching(webs[0], ms[0]);
    TaggedWeb web = build_tagged_web(t);
    Rng rng(71);
    // random vectors v_i in Q^2; evaluate by expanding multilinearly
    std::vector<std::vector<Rational>> v(6, std::vector<Rational>(2));
    for (auto& col : v)
        for (auto& x : col) x = rng.rational() - rat(5);
    auto space = LabelSpace::make(2, 3, std::vector<int>(6, 1));
    Rational by_expansion(0);
    for (const auto& S : space->labels) {
        Rational coef(1);
        for (int i = 0; i < 6; ++i) coef *= v[i][mask_to_subset(S[i])[0] - 1];
        by_expansion += coef * evaluate_tagged(web, S);
    }
    // independent route: expand the full 2^6 products over all words, zero
    // values included (they are zero by color conservation, checked above)
    Rational by_all_words(0);
    for (int w1 = 1; w1 <= 2; ++w1)
        for (int w2 = 1; w2 <= 2; ++w2)
            for (int w3 = 1; w3 <= 2; ++w3)
                for (int w4 = 1; w4 <= 2; ++w4)
                    for (int w5 = 1; w5 <= 2; ++w5)
                        for (int w6 = 1; w6 <= 2; ++w6) {
                            std::vector<int> word{w1, w2, w3, w4, w5, w6};
                            Label S;
                            for (int c : word) S.push_back(1u << (c - 1));
                            Rational coef(1);
                            for (int i = 0; i < 6; ++i) coef *= v[i][word[i] - 1];
                            by_all_words += coef * evaluate_tagged(web, S);
                        }
    CHECK(by_expansion == by_all_words);
}

TEST_CASE("tagged web JSON round trip") {
    PlanarBipartiteGraph g = claw_graph();
    WeblikeSubgraph w{&g, 4, claw_weblike_mult(g)};
    Matching pi;
    pi.edges = claw_matching_edges(g);
    std::sort(pi.edges.begin(), pi.edges.end());
    OrientedTagging t = tag_from_matching(w, pi);
    std::string text = serialize_tagged_web(t);
    PlanarBipartiteGraph storage;
    OrientedTagging back = parse_tagged_web(text, storage);
    CHECK(serialize_tagged_web(back) == text);
    TaggedWeb web = build_tagged_web(back);
    CHECK(evaluate_tagged(web, word({1, 2, 3, 4, 3, 2, 1, 4})) == -1);
}

TEST_CASE("matching not supported on the subgraph is rejected") {
    PlanarBipartiteGraph g = claw_graph();
    WeblikeSubgraph w{&g, 4, claw_weblike_mult(g)};
    w.mult[g.edge_index("b8")] = 0;
    w.mult[g.edge_index("b7")] = 2;  // keep sums valid
    Matching pi;
    pi.edges = claw_matching_edges(g);
    CHECK_THROWS(tag_from_matching(w, pi));
}
