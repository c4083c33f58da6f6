// Test-only oracle: exact phase-1 simplex deciding whether x is a
// non-negative combination of the given generators. Independent of the
// double-description route used by the library.
#pragma once

#include <vector>

#include "fanopot/lattice.hpp"

namespace fanopot::testing {

inline bool nonneg_combination_exists(const std::vector<LatticeVector>& gens,
                                      const LatticeVector& x) {
    const size_t m = x.size();        // equations
    const size_t n = gens.size();     // lambdas
    // tableau columns: n lambdas, m artificials, rhs
    std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(n + m + 1));
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) {
        int sgn = x[i] < 0 ? -1 : 1;
        for (size_t j = 0; j < n; ++j) t[i][j] = Rational(sgn * gens[j][i]);
        t[i][n + i] = Rational(1);
        t[i][n + m] = Rational(sgn * x[i]);
        basis[i] = n + i;
    }
    // objective row: minimize sum of artificials, expressed in reduced costs
    for (size_t j = 0; j <= n + m; ++j) {
        Rational s;
        for (size_t i = 0; i < m; ++i) s += t[i][j];
        t[m][j] = (j >= n && j < n + m) ? s - Rational(1) : s;
    }
    while (true) {
        size_t enter = n + m;
        for (size_t j = 0; j < n + m; ++j)
            if (t[m][j].sign() > 0) { enter = j; break; }  // Bland
        if (enter == n + m) break;
        size_t leave = m;
        Rational best;
        for (size_t i = 0; i < m; ++i) {
            if (t[i][enter].sign() <= 0) continue;
            Rational ratio = t[i][n + m] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave]))
                { leave = i; best = ratio; }
        }
        if (leave == m) break; // unbounded; cannot happen in phase 1
        Rational piv = t[leave][enter];
        for (size_t j = 0; j <= n + m; ++j) t[leave][j] /= piv;
        for (size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter].is_zero()) continue;
            Rational f = t[i][enter];
            for (size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return t[m][n + m].is_zero();
}

} // namespace fanopot::testing
