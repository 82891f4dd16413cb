#include "doctest.h"
#include "webdimer/labels.hpp"
#include "webdimer/weblike.hpp"

using namespace webdimer;

namespace {
Label word(const std::vector<int>& colors) {
    Label S;
    for (int c : colors) S.push_back(1u << (c - 1));
    return S;
}
}  // namespace

TEST_CASE("sign of boundary label lists") {
    CHECK(sign_of_boundary(word({1, 2, 3, 4, 5, 6})) == 1);
    // pinned: ({1},{2},{3},{4},{3},{2},{1},{4}) has sign -1
    CHECK(sign_of_boundary(word({1, 2, 3, 4, 3, 2, 1, 4})) == -1);
    // swapping adjacent distinct singletons flips the sign
    CHECK(sign_of_boundary(word({2, 1, 3, 4, 3, 2, 1, 4})) == 1);
    // multi-element subsets wedge in ascending order
    Label S{subset_to_mask({1, 2}), subset_to_mask({1, 2})};
    CHECK(sign_of_boundary(S) == -1);  // word 1 2 1 2 has one inversion
}

TEST_CASE("label space sizes") {
    CHECK(LabelSpace::make(2, 3, std::vector<int>(6, 1))->size() == 20);
    CHECK(LabelSpace::make(3, 3, std::vector<int>(9, 1))->size() == 1680);
    CHECK(LabelSpace::make(4, 2, std::vector<int>(8, 1))->size() == 2520);
    CHECK(LabelSpace::make(3, 2, std::vector<int>(6, 1))->size() == 90);
    CHECK(enumerate_boundary_labels(2, 3, std::vector<int>(6, 1)).size() == 20);
    CHECK_THROWS(LabelSpace::make(2, 3, std::vector<int>(5, 1)));
}

TEST_CASE("duality between label lists and location lists") {
    auto space = LabelSpace::make(3, 2, std::vector<int>(6, 1));
    for (const auto& S : space->labels) {
        auto I = label_to_locations(S, 3);
        CHECK(static_cast<int>(I.size()) == 3);
        for (const auto& Ii : I) CHECK(Ii.size() == 2);
        CHECK(locations_to_label(I, 6) == S);
    }
    // multiset union of the I's is {1^l1, ..., n^ln}
    auto sp2 = LabelSpace::make(2, 2, std::vector<int>{2, 1, 1, 0});
    for (const auto& S : sp2->labels) {
        auto I = label_to_locations(S, 2);
        std::vector<int> content(4, 0);
        for (const auto& Ii : I)
            for (int j : Ii) content[j - 1]++;
        CHECK(content == std::vector<int>{2, 1, 1, 0});
    }
}
