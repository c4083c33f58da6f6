#include "fanopot/linalg.hpp"

#include <cstdlib>

namespace fanopot {

QMatrix to_rational(const IMatrix& a) {
    QMatrix q(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        q[i].reserve(a[i].size());
        for (Int x : a[i]) q[i].emplace_back(x);
    }
    return q;
}

Rational det(QMatrix a) {
    const size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw ValidationError("det: matrix not square");
    Rational d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            Rational f = a[r][c] / a[c][c];
            for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

Int det_integer(const IMatrix& a) {
    return det(to_rational(a)).as_integer();
}

size_t rank(QMatrix a) {
    if (a.empty()) return 0;
    const size_t rows = a.size(), cols = a[0].size();
    size_t rk = 0;
    for (size_t c = 0; c < cols && rk < rows; ++c) {
        size_t p = rk;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rk]);
        for (size_t r = rk + 1; r < rows; ++r) {
            if (a[r][c].is_zero()) continue;
            Rational f = a[r][c] / a[rk][c];
            for (size_t k = c; k < cols; ++k) a[r][k] -= f * a[rk][k];
        }
        ++rk;
    }
    return rk;
}

size_t rank(const IMatrix& a) { return rank(to_rational(a)); }

std::optional<QVector> solve_square(QMatrix a, QVector b) {
    const size_t n = a.size();
    if (b.size() != n) throw ValidationError("solve_square: size mismatch");
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Rational f = a[r][c] / a[c][c];
            for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    QVector x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

std::vector<QVector> kernel(QMatrix a) {
    if (a.empty()) return {};
    const size_t rows = a.size(), cols = a[0].size();
    std::vector<int> pivot_col;
    size_t rk = 0;
    for (size_t c = 0; c < cols && rk < rows; ++c) {
        size_t p = rk;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rk]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rk || a[r][c].is_zero()) continue;
            Rational f = a[r][c] / a[rk][c];
            for (size_t k = 0; k < cols; ++k) a[r][k] -= f * a[rk][k];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++rk;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<QVector> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        QVector v(cols);
        v[fc] = Rational(1);
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -a[i][fc] / a[i][pivot_col[i]];
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

void swap_rows(IMatrix& m, size_t i, size_t j) { std::swap(m[i], m[j]); }

void swap_cols(IMatrix& m, size_t i, size_t j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}

// row i -= f * row j
void row_op(IMatrix& m, size_t i, size_t j, Int f) {
    for (size_t k = 0; k < m[i].size(); ++k)
        m[i][k] = checked_sub(m[i][k], checked_mul(f, m[j][k]));
}

void col_op(IMatrix& m, size_t i, size_t j, Int f) {
    for (auto& row : m) row[i] = checked_sub(row[i], checked_mul(f, row[j]));
}

IMatrix identity(size_t n) {
    IMatrix id(n, LatticeVector(n, 0));
    for (size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

} // namespace

SmithResult smith_normal_form(IMatrix a) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    SmithResult res;
    res.u = identity(rows);
    res.v = identity(cols);
    size_t t = 0;
    const size_t nmin = std::min(rows, cols);
    while (t < nmin) {
        // locate the smallest nonzero entry in the trailing block
        size_t pi = t, pj = t;
        Int best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                Int v = std::abs(a[i][j]);
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        if (pi != t) { swap_rows(a, pi, t); swap_rows(res.u, pi, t); }
        if (pj != t) { swap_cols(a, pj, t); swap_cols(res.v, pj, t); }
        bool reduced = true;
        for (size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            Int f = a[i][t] / a[t][t];
            row_op(a, i, t, f);
            row_op(res.u, i, t, f);
            if (a[i][t] != 0) reduced = false;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            Int f = a[t][j] / a[t][t];
            col_op(a, j, t, f);
            col_op(res.v, j, t, f);
            if (a[t][j] != 0) reduced = false;
        }
        if (!reduced) continue;
        // ensure divisibility of the remaining block by the pivot
        bool divides = true;
        for (size_t i = t + 1; i < rows && divides; ++i)
            for (size_t j = t + 1; j < cols && divides; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    col_op(a, t, j, -1);
                    col_op(res.v, t, j, -1);
                    divides = false;
                }
        if (!divides) continue;
        if (a[t][t] < 0) {
            for (size_t j = 0; j < cols; ++j) { a[t][j] = -a[t][j]; }
            for (size_t j = 0; j < rows; ++j) { res.u[t][j] = -res.u[t][j]; }
        }
        ++t;
    }
    res.diag.assign(nmin, 0);
    for (size_t i = 0; i < nmin; ++i) res.diag[i] = a[i][i];
    res.rank = t;
    return res;
}

IMatrix integer_kernel(const IMatrix& a) {
    if (a.empty()) return {};
    // u a v = s  =>  kernel spanned by the columns of v beyond rank(s)
    SmithResult s = smith_normal_form(a);
    const size_t cols = a[0].size();
    IMatrix basis;
    for (size_t j = s.rank; j < cols; ++j) {
        LatticeVector col(cols);
        for (size_t i = 0; i < cols; ++i) col[i] = s.v[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

} // namespace fanopot
