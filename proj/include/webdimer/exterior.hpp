#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "webdimer/labels.hpp"
#include "webdimer/rational.hpp"

namespace webdimer {

// Sparse element of the a-th exterior power of U = Q^r, in the basis
// E_S = wedge of E_c for c in S ascending. Keys are color bitmasks.
struct ExteriorElement {
    int grade = 0;
    std::map<std::uint32_t, Rational> coeff;  // no zeros stored

    static ExteriorElement basis(std::uint32_t mask);
    void add(std::uint32_t mask, const Rational& c);
    bool is_zero() const { return coeff.empty(); }
    bool operator==(const ExteriorElement& o) const {
        return grade == o.grade && coeff == o.coeff;
    }
};

// Number of inversions between two disjoint masks (pairs a in A, b in B
// with a > b), as a sign: E_A ^ E_B = merge_sign(A,B) E_{A|B}.
int merge_sign(std::uint32_t a, std::uint32_t b);

// Multilinear exterior product x_1 ^ ... ^ x_s.
ExteriorElement wedge(const std::vector<ExteriorElement>& xs, int r);

// Convenience: wedge of single basis vectors in the given order, e.g.
// wedge_word({2,3,1}) = E_2^E_3^E_1 = +E_{123}.
ExteriorElement wedge_word(const std::vector<int>& colors, int r);

// Formal sum of elementary tensors of exterior basis elements.
struct TensorSum {
    std::vector<int> grades;
    std::map<std::vector<std::uint32_t>, Rational> terms;
    void add(const std::vector<std::uint32_t>& key, const Rational& c);
};

// The shuffle morphism applied to x: splits grade-b input into tensor slots
// of the given grades (slot order = output order). The sign of the term
// (T_1,..,T_m) is the merge sign of the word (T_1 asc,..,T_m asc) times the
// global block-reversal sign (-1)^{sum_{i<j} g_i g_j}.
TensorSum shuffle(const ExteriorElement& x, const std::vector<int>& grades);

// Pair tag: coefficient of the volume form in x ^ y (side = argument order).
Rational pair_tag_eval(const ExteriorElement& x, const ExteriorElement& y, int r);
// Explicit side: left keeps the order (x, y), right swaps it.
Rational pair_tag_eval(const ExteriorElement& x, const ExteriorElement& y, int r, bool left);

// Source tag: the shuffle of E_{[r]} into slots (g1, g2).
TensorSum source_tag_expand(int g1, int g2, int r);
// Explicit side: left emits (a, r-a), right emits (r-a, a).
TensorSum source_tag_expand(int a, int r, bool left);

}  // namespace webdimer
