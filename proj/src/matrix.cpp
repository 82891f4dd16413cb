#include "webdimer/matrix.hpp"

#include <stdexcept>

namespace webdimer {

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

int matrix_rank(const ExactMatrix& m) {
    RowSpace rs(m.cols);
    for (int r = 0; r < m.rows; ++r) {
        std::vector<Rational> row(m.entries.begin() + static_cast<size_t>(r) * m.cols,
                                  m.entries.begin() + static_cast<size_t>(r + 1) * m.cols);
        rs.add(std::move(row));
    }
    return rs.rank();
}

std::vector<Rational> RowSpace::reduce(std::vector<Rational> row) const {
    for (size_t k = 0; k < basis.size(); ++k) {
        const Rational& x = row[pivot[k]];
        if (x != 0) {
            Rational f = x;  // basis rows are normalized to pivot 1
            for (int c = 0; c < cols; ++c)
                if (basis[k][c] != 0) row[c] -= f * basis[k][c];
        }
    }
    return row;
}

bool RowSpace::add(std::vector<Rational> row) {
    if (static_cast<int>(row.size()) != cols)
        throw std::invalid_argument("row length mismatch");
    row = reduce(std::move(row));
    int p = -1;
    for (int c = 0; c < cols; ++c)
        if (row[c] != 0) {
            p = c;
            break;
        }
    if (p < 0) return false;
    Rational inv = 1 / row[p];
    for (int c = p; c < cols; ++c)
        if (row[c] != 0) row[c] *= inv;
    // keep the basis reduced
    for (size_t k = 0; k < basis.size(); ++k) {
        const Rational& x = basis[k][p];
        if (x != 0) {
            Rational f = x;
            for (int c = 0; c < cols; ++c)
                if (row[c] != 0) basis[k][c] -= f * row[c];
        }
    }
    basis.push_back(std::move(row));
    pivot.push_back(p);
    return true;
}

std::optional<std::vector<Rational>> matrix_solve(const ExactMatrix& m,
                                                  const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m.rows)
        throw std::invalid_argument("matrix_solve: rhs length != rows");
    // Gauss-Jordan on the augmented matrix.
    int R = m.rows, C = m.cols;
    std::vector<std::vector<Rational>> a(R, std::vector<Rational>(C + 1));
    for (int r = 0; r < R; ++r) {
        for (int c = 0; c < C; ++c) a[r][c] = m.at(r, c);
        a[r][C] = b[r];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < C && row < R; ++col) {
        int sel = -1;
        for (int r = row; r < R; ++r)
            if (a[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[sel], a[row]);
        Rational inv = 1 / a[row][col];
        for (int c = col; c <= C; ++c) a[row][c] *= inv;
        for (int r = 0; r < R; ++r) {
            if (r == row) continue;
            if (a[r][col] != 0) {
                Rational f = a[r][col];
                for (int c = col; c <= C; ++c) a[r][c] -= f * a[row][c];
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int r = row; r < R; ++r)
        if (a[r][C] != 0) return std::nullopt;  // 0 = nonzero
    std::vector<Rational> x(C, Rational(0));
    for (int k = 0; k < row; ++k) x[pivot_col[k]] = a[k][C];
    return x;
}

}  // namespace webdimer
