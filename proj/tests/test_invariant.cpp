#include "doctest.h"
#include "webdimer/duality.hpp"
#include "webdimer/fixtures.hpp"
#include "webdimer/invariant_ops.hpp"
#include "webdimer/moves.hpp"
#include "webdimer/topcell.hpp"

using namespace webdimer;

TEST_CASE("factorization holds on the square network, symbolically") {
    Network nw = square_network_symbolic();
    CHECK(verify_factorization(nw, 3, std::vector<int>(6, 1)).all_pass());
    CHECK(verify_factorization(nw, 1, {0, 1, 0, 1, 0, 0}).all_pass());
    CHECK(verify_factorization(nw, 2, {1, 1, 2, 0, 0, 0}).all_pass());
}

TEST_CASE("r=1 web measurement is the boundary measurement with a sorted-word sign") {
    Network nw = square_network_symbolic();
    for (const auto& I : k_subsets(6, 2)) {
        std::vector<int> lambda(6, 0);
        for (int i : I) lambda[i - 1] = 1;
        Invariant x = web_measurement(nw, 1, lambda);
        REQUIRE(x.space->size() == 1);
        CHECK(x.values[0] == boundary_measurement(nw, I));
    }
}

TEST_CASE("welldefined: gauge scaling acts by alpha^r") {
    Rng rng(73);
    Network nw = random_network(square_network_symbolic().g, rng);
    MoveResult res = gauge(nw, "WE", rat(2));
    CHECK(res.scalar == MultiPoly(rat(1, 2)));
    CHECK(verify_welldefined(nw, res.network, res.scalar, 2, {1, 1, 2, 0, 0, 0}).all_pass());
    CHECK(verify_welldefined(nw, res.network, res.scalar, 3, std::vector<int>(6, 1)).all_pass());
    // wrong scalar fails
    CHECK(!verify_welldefined(nw, res.network, MultiPoly::constant(1), 3, std::vector<int>(6, 1))
               .all_pass());
}

TEST_CASE("pairing against Plucker products gives labeling counts") {
    Network nw = square_network_symbolic();
    auto webs = enumerate_weblike(nw.g, 3, std::vector<int>(6, 1));
    auto space = LabelSpace::make(3, 2, std::vector<int>(6, 1));
    for (const auto& w : webs) {
        Invariant x = bold_value_table(w, space);
        for (size_t t = 0; t < space->size(); t += 7) {
            const Label& S = space->labels[t];
            PluckerExpression f;
            f.r = 3;
            f.k = 2;
            f.n = 6;
            f.add(label_to_locations(S, 3), Rational(1));
            Rational got = pair_invariant(x, f);
            CHECK(got == from_ll(count_consistent_labelings(w, S)));
            CHECK(got >= 0);
        }
    }
    // zero invariant pairs to zero
    Invariant zero(space);
    PluckerExpression f;
    f.r = 3;
    f.k = 2;
    f.n = 6;
    f.add(label_to_locations(space->labels[0], 3), Rational(1));
    CHECK(pair_invariant(zero, f) == 0);
}

TEST_CASE("pairing of a web measurement evaluates the Plucker expression at the point") {
    Rng rng(79);
    Network nw = random_network(square_network_symbolic().g, rng);
    Invariant x = web_measurement(nw, 2, std::vector<int>{1, 1, 1, 1, 0, 0});
    PluckerVector p = plucker_vector(nw);
    PluckerExpression f;
    f.r = 2;
    f.k = 2;
    f.n = 6;
    f.add({Subset{1, 2}, Subset{3, 4}}, Rational(1));
    Rational expect = p.at({1, 2}).constant_value() * p.at({3, 4}).constant_value();
    CHECK(pair_invariant(x, f) == expect);
}

TEST_CASE("pairing is well-defined modulo three-term Plucker relations") {
    // a genuine relation instance of Gr(3,6) with content (2,1,1,1,1,0):
    // D124 D135 - D123 D145 - D125 D134 = 0, so it pairs to zero with
    // every invariant in the span of bold webs of that degree
    PluckerExpression rel;
    rel.r = 2;
    rel.k = 3;
    rel.n = 6;
    rel.add({Subset{1, 2, 4}, Subset{1, 3, 5}}, Rational(1));
    rel.add({Subset{1, 2, 3}, Subset{1, 4, 5}}, Rational(-1));
    rel.add({Subset{1, 2, 5}, Subset{1, 3, 4}}, Rational(-1));
    PlanarBipartiteGraph g = top_cell_graph(3, 6);
    std::vector<int> lambda{2, 1, 1, 1, 1, 0};
    auto space = LabelSpace::make(2, 3, lambda);
    int checked = 0;
    for (const auto& w : enumerate_weblike(g, 2, lambda)) {
        Invariant x = bold_value_table(w, space);
        if (x.is_zero()) continue;
        CHECK(pair_invariant(x, rel) == 0);
        if (++checked == 12) break;
    }
    CHECK(checked > 0);
}

TEST_CASE("immanant of an evaluation functional is the signed Plucker product") {
    auto space = LabelSpace::make(2, 2, std::vector<int>(4, 1));
    for (size_t t = 0; t < space->size(); ++t) {
        std::vector<Rational> phi(space->size(), Rational(0));
        phi[t] = 1;
        PluckerExpression F = immanant(phi, space);
        // pair-consistency against random networks
        Rng rng(89 + t);
        for (int trial = 0; trial < 5; ++trial) {
            Network nw = random_network(top_cell_graph(2, 4), rng);
            PluckerVector p = plucker_vector(nw);
            Rational lhs(0);
            for (const auto& [key, c] : F.terms) {
                Rational prod = c;
                for (const auto& I : key) prod *= p.at(I).constant_value();
                lhs += prod;
            }
            Invariant x = web_measurement(nw, 2, std::vector<int>(4, 1));
            Rational rhs = x.values[t].constant_value();
            CHECK(lhs == rhs);
        }
    }
    // zero functional gives the zero expression
    std::vector<Rational> zero(space->size(), Rational(0));
    CHECK(immanant(zero, space).terms.empty());
}

TEST_CASE("immanant matrix rank equals the invariant space dimension") {
    // (r,k) = (2,3), n = 6: the 20 signed products span a rank-5 space
    auto space = LabelSpace::make(2, 3, std::vector<int>(6, 1));
    std::map<std::vector<int>, int> mono_index;
    std::vector<std::map<std::vector<int>, Rational>> rows;
    for (const auto& S : space->labels) {
        PluckerExpression F;
        F.r = 2;
        F.k = 3;
        F.n = 6;
        F.add(label_to_locations(S, 2), Rational(sign_of_boundary(S)));
        rows.push_back(plucker_monomials(F));
        for (const auto& [m, c] : rows.back())
            if (!mono_index.count(m)) {
                int next = static_cast<int>(mono_index.size());
                mono_index[m] = next;
            }
    }
    ExactMatrix M(static_cast<int>(rows.size()), static_cast<int>(mono_index.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [m, c] : rows[i]) M.at(static_cast<int>(i), mono_index[m]) = c;
    CHECK(matrix_rank(M) == 5);
    CHECK(dim_invariant_space(2, std::vector<int>(6, 1)) == 5);
}

TEST_CASE("dimension pins by tableau count") {
    CHECK(dim_invariant_space(3, std::vector<int>(9, 1)) == 42);
    CHECK(dim_invariant_space(2, std::vector<int>(6, 1)) == 5);
    CHECK(dim_invariant_space(3, std::vector<int>(6, 1)) == 5);
    CHECK(dim_invariant_space(2, std::vector<int>(8, 1)) == 14);
    CHECK(dim_invariant_space(4, std::vector<int>(8, 1)) == 14);
    CHECK(dim_invariant_space(1, {1, 0, 1, 1, 0}) == 1);
    // hand enumeration: rows contain {1,4} each; of the six ways to split
    // {2,3,5,6}, only {2,3}|{5,6} and {2,5}|{3,6} satisfy the column order
    CHECK(dim_invariant_space(2, {2, 1, 1, 2, 1, 1}) == 2);
    auto sub = positroid_subspace(top_cell_graph(4, 6), 2, {2, 1, 1, 2, 1, 1});
    CHECK(sub.dimension == 2);
}

TEST_CASE("evaluate_on_matrix equals the 2x2 minor for a single arc") {
    PlanarBipartiteGraph g = tripod_graph(2, {{1, 2}});
    auto webs = enumerate_weblike(g, 2, std::vector<int>{1, 1});
    REQUIRE(webs.size() == 1);
    Invariant x = bold_value_table(webs[0]);
    Rng rng(97);
    for (int t = 0; t < 10; ++t) {
        std::vector<std::vector<Rational>> M(2, std::vector<Rational>(2));
        for (auto& row : M)
            for (auto& v : row) v = rng.rational() - rat(5);
        Rational minor = M[0][0] * M[1][1] - M[1][0] * M[0][1];
        CHECK(evaluate_on_matrix(x, M) == minor);
    }
    // repeated column against the antisymmetric slots gives zero
    std::vector<std::vector<Rational>> M(2, std::vector<Rational>(2));
    M[0][0] = M[0][1] = rat(3);
    M[1][0] = M[1][1] = rat(7);
    CHECK(evaluate_on_matrix(x, M) == 0);
}

TEST_CASE("partial evaluation basics") {
    auto space = LabelSpace::make(3, 2, std::vector<int>(6, 1));
    Invariant zero(space);
    Invariant z2 = partial_evaluate(zero, {5, 6});
    CHECK(z2.is_zero());
    CHECK(z2.space->r == 2);
    CHECK_THROWS(partial_evaluate(zero, {5}));
    // lambda 0 at a position in I
    auto sp2 = LabelSpace::make(2, 2, {1, 1, 1, 1, 0, 0});
    Invariant y(sp2);
    CHECK_THROWS(partial_evaluate(y, {5, 6}));
}

TEST_CASE("permute relabels slots and composes") {
    Network nw = square_network_symbolic();
    Rng rng(101);
    Network num = random_network(nw.g, rng);
    Invariant x = web_measurement(num, 3, std::vector<int>(6, 1));
    std::vector<int> id{1, 2, 3, 4, 5, 6};
    CHECK(permute(x, id) == x);
    std::vector<int> sigma{2, 3, 4, 5, 6, 1};
    Invariant once = permute(x, sigma);
    Invariant twice = permute(once, sigma);
    std::vector<int> sigma2{3, 4, 5, 6, 1, 2};
    CHECK(twice == permute(x, sigma2));
    // lambda incompatibility rejected
    Invariant y = web_measurement(num, 2, {2, 1, 1, 0, 0, 0});
    CHECK_THROWS(permute(y, sigma));
}

TEST_CASE("positroid subspace ranks on small top cells") {
    auto sub = positroid_subspace(top_cell_graph(3, 6), 2, std::vector<int>(6, 1));
    CHECK(sub.dimension == 5);
    CHECK(static_cast<int>(sub.basis.size()) == 5);
    // not the top cell: the square network graph at r=1 sees only its positroid
    auto sub2 = positroid_subspace(square_network_symbolic().g, 1, {1, 0, 0, 1, 0, 0});
    CHECK(sub2.dimension == 1);
}

TEST_CASE("invariant JSON round trip omits zeros") {
    Network nw = square_network_symbolic();
    Invariant x = web_measurement(nw, 3, std::vector<int>(6, 1));
    std::string text = serialize_invariant(x);
    Invariant back = parse_invariant(text);
    CHECK(back == x);
    CHECK(text.find("\"0\"") == std::string::npos);
}

TEST_CASE("partial evaluation commutes with permutations fixing I setwise") {
    Rng rng(103);
    PlanarBipartiteGraph g = top_cell_graph(2, 6);
    Network nw = random_network(g, rng);
    Invariant x = web_measurement(nw, 3, std::vector<int>(6, 1));
    Subset I{5, 6};
    // sigma fixes {5,6} setwise, permutes the rest
    std::vector<int> sigma{3, 1, 2, 4, 6, 5};
    Invariant lhs = partial_evaluate(permute(x, sigma), I);
    Invariant rhs = permute(partial_evaluate(x, I), sigma);
    CHECK(lhs == rhs);
    // linearity of partial evaluation
    Network nw2 = random_network(g, rng);
    Invariant y = web_measurement(nw2, 3, std::vector<int>(6, 1));
    Invariant sum = x;
    sum += y;
    Invariant ls = partial_evaluate(sum, I);
    Invariant r1 = partial_evaluate(x, I);
    r1 += partial_evaluate(y, I);
    CHECK(ls == r1);
}

TEST_CASE("perfect pairing: counts matrix over a top cell has full rank") {
    PlanarBipartiteGraph g = top_cell_graph(3, 6);
    std::vector<int> ones(6, 1);
    auto space = LabelSpace::make(2, 3, ones);
    auto webs = enumerate_weblike(g, 2, ones);
    ExactMatrix M(static_cast<int>(webs.size()), static_cast<int>(space->size()));
    for (size_t i = 0; i < webs.size(); ++i) {
        Invariant x = bold_value_table(webs[i], space);
        for (size_t j = 0; j < space->size(); ++j) {
            PluckerExpression f;
            f.r = 2;
            f.k = 3;
            f.n = 6;
            f.add(label_to_locations(space->labels[j], 2), Rational(1));
            M.at(static_cast<int>(i), static_cast<int>(j)) = pair_invariant(x, f);
        }
    }
    CHECK(matrix_rank(M) == dim_invariant_space(2, ones));
}

TEST_CASE("welldefined across a structural move: two-valent removal") {
    GraphBuilder gb;
    gb.vertex("bdy1", true, 1, -2, 0);
    gb.vertex("bdy2", true, 2, 2, 0);
    gb.vertex("u", true, 0, -1, 0);
    gb.vertex("v", false, 0, 0, 0);
    gb.vertex("u2", true, 0, 1, 0);
    gb.vertex("wl", false, 0, -1.5, 0);
    gb.vertex("wr", false, 0, 1.5, 0);
    gb.edge("e1", "u", "v", MultiPoly::constant(2));
    gb.edge("e2", "v", "u2", MultiPoly::constant(3));
    gb.edge("l", "wl", "u");
    gb.edge("r", "wr", "u2");
    gb.edge("bl", "wl", "bdy1");
    gb.edge("br", "wr", "bdy2");
    Network nw = gb.network(2);
    MoveResult res = remove_bivalent(nw, "v");
    CHECK(verify_welldefined(nw, res.network, res.scalar, 2, {1, 1}).all_pass());
    CHECK(verify_welldefined(nw, res.network, res.scalar, 3, {2, 1}).all_pass());
}
