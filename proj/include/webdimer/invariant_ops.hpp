#pragma once

#include "webdimer/report.hpp"
#include "webdimer/weblike.hpp"

namespace webdimer {

// The r-fold boundary measurement Web_r(N; lambda) = sum over r-weblike
// subgraphs of wt(W) times the canonical invariant of W.
Invariant web_measurement(const Network& nw, int r, const std::vector<int>& lambda);

// For every S: sign(S) Web_r(N;lambda)|_{E_S} = prod_i Delta_{I_i}(N), exactly.
Report verify_factorization(const Network& nw, int r, const std::vector<int>& lambda);

// Web_r(N) = alpha^r Web_r(N') tablewise.
Report verify_welldefined(const Network& nw, const Network& moved, const MultiPoly& alpha,
                          int r, const std::vector<int>& lambda);

// <x, f> = sum of coefficients times sign(S) x(E_S), S dual to each product.
Rational pair_invariant(const Invariant& x, const PluckerExpression& f);

// Functional given by its value phi_S on each basis label; returns some
// Plucker-product representative F with F(X(N)) = phi(Web_r(N;lambda)).
PluckerExpression immanant(const std::vector<Rational>& phi,
                           std::shared_ptr<const LabelSpace> space);

// Monomial expansion of a Plucker-product sum as a polynomial in the entries
// of a k x n matrix (key: exponent per (row,col) cell, row-major).
std::map<std::vector<int>, Rational> plucker_monomials(const PluckerExpression& f);

// Number of r x k tableaux of content lambda, rows strictly increasing,
// columns weakly increasing.
long long dim_invariant_space(int r, const std::vector<int>& lambda);

// Multilinear evaluation: sum over labels of prod_i M[color_i][i] x(E_S).
Rational evaluate_on_matrix(const Invariant& x, const std::vector<std::vector<Rational>>& M);

// Specialize the inputs at positions I to E_r and restrict to rank r-1.
Invariant partial_evaluate(const Invariant& x, const Subset& I);

// Slot relabeling: value at S is x at (S_{sigma(1)},..,S_{sigma(n)}).
Invariant permute(const Invariant& x, const std::vector<int>& sigma);
PluckerExpression permute(const PluckerExpression& f, const std::vector<int>& sigma);

struct PositroidSubspace {
    int dimension = 0;
    std::vector<int> basis;  // indices into subgraphs
    std::vector<WeblikeSubgraph> subgraphs;
    int zero_invariants = 0;  // subgraphs with no consistent labelings at all
};

// Rank of the stacked bold value tables of all r-weblike subgraphs of g.
PositroidSubspace positroid_subspace(const PlanarBipartiteGraph& g, int r,
                                     const std::vector<int>& lambda);

struct PartialEvalSplit {
    int total = 0;      // dim of the span of all bold tables
    int surviving = 0;  // rank of their partial evaluations along I
    int killed = 0;     // total - surviving
};

PartialEvalSplit partial_eval_split(const PlanarBipartiteGraph& g, int r,
                                    const std::vector<int>& lambda, const Subset& I);

}  // namespace webdimer
