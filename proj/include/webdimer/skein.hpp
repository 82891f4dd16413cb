#pragma once

#include "webdimer/report.hpp"
#include "webdimer/tagged.hpp"

namespace webdimer {

// Square-move fragment data; the fragment connects to the outside with
// multiplicity j (southwest), l (southeast), r+v-s-l (northeast) and
// r+s-v-j (northwest).
struct FragmentScenario {
    int r = 1, j = 0, l = 0, v = 0, s = 0;
    bool admissible() const;
};

std::vector<FragmentScenario> all_square_scenarios(int r);

// W_s = sum_t binom(j-l+v-s, t) W'_{v-t}, tablewise, both sides closed by the
// same ambient boundary. closure_variant 1 splits each ambient leg over two
// boundary vertices.
Report square_move_identity(const FragmentScenario& sc, int closure_variant = 0);

// Parallel edges a, b merge into one edge a+b at the cost of binom(a+b, b).
Report bigon_identity(int r, int a, int b);

// A two-valent white vertex with edge multiplicities a, r-a contracts away.
Report bivalent_identity(int r, int a);

// Tag switch factor (-1)^{a(r-a)} and sign-free tag migration on a battery
// of small tagged webs.
Report tag_relation_checks(int r);

// generalized binomial coefficient (negative upper index allowed)
long long gbinom(long long m, long long t);

}  // namespace webdimer
