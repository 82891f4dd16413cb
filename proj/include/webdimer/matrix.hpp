#pragma once

#include <optional>
#include <vector>

#include "webdimer/rational.hpp"

namespace webdimer {

// Dense matrix over the rationals.
struct ExactMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> entries;  // row-major, rows*cols

    ExactMatrix() = default;
    ExactMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c, Rational(0)) {}

    Rational& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

    ExactMatrix transposed() const;
    static ExactMatrix identity(int n);
};

int matrix_rank(const ExactMatrix& m);

// Some exact solution of Mx = b, or nullopt if inconsistent. When the system
// is underdetermined, free variables of the reduced echelon form are set to 0.
std::optional<std::vector<Rational>> matrix_solve(const ExactMatrix& m,
                                                  const std::vector<Rational>& b);

// Incremental row-space builder: keeps a reduced echelon basis, reports
// whether each added row was independent of the rows seen so far.
struct RowSpace {
    int cols;
    std::vector<std::vector<Rational>> basis;  // echelon rows
    std::vector<int> pivot;                    // pivot column per basis row
    explicit RowSpace(int c) : cols(c) {}
    bool add(std::vector<Rational> row);  // true if rank grew
    int rank() const { return static_cast<int>(basis.size()); }
    // Residual of row after reduction against the basis (zero vector iff dependent).
    std::vector<Rational> reduce(std::vector<Rational> row) const;
};

// Number of strict inversions of `word`, as a sign. Equal keys never invert.
template <typename T>
int perm_sign(const std::vector<T>& word) {
    long inv = 0;
    for (size_t i = 0; i < word.size(); ++i)
        for (size_t j = i + 1; j < word.size(); ++j)
            if (word[j] < word[i]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace webdimer
