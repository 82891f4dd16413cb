#pragma once

#include "webdimer/invariant_ops.hpp"

namespace webdimer {

struct WebBasis {
    std::string label;
    std::vector<std::string> names;
    std::vector<Invariant> elements;
};

int basis_rank(const WebBasis& basis);

// The Catalan(n/2) noncrossing arc diagrams as 2-weblike invariants.
WebBasis crossingless_matchings(int n);

// The five non-elliptic SL3 webs on six boundary vertices: three rotations
// of the double tripod and two rotations of the hexapod.
WebBasis sl3_basis_n6();

// Express an invariant's value table as a sum of r-fold Plucker products of
// k-subsets (r = n/k factors), by exact linear solve. Any representative.
PluckerExpression expand_to_plucker_products(const Invariant& x);

// M[i][j] = <A_i, expansion of B_j>; A lives in W(r,n), B in W(k,n), n = kr.
ExactMatrix duality_matrix(const WebBasis& A, const WebBasis& B);

bool check_signed_permutation(const ExactMatrix& m);

}  // namespace webdimer
