// Exact linear algebra over the rationals plus integer Smith normal form.
#pragma once

#include <optional>
#include <vector>

#include "fanopot/lattice.hpp"

namespace fanopot {

using QMatrix = std::vector<QVector>;
using IMatrix = std::vector<LatticeVector>;

QMatrix to_rational(const IMatrix& a);

// Determinant by Gaussian elimination with exact pivoting.
Rational det(QMatrix a);
Int det_integer(const IMatrix& a);

size_t rank(QMatrix a);
size_t rank(const IMatrix& a);

// Solves the square system a x = b; nullopt when a is singular.
std::optional<QVector> solve_square(QMatrix a, QVector b);

// Basis of { x : a x = 0 } over Q.
std::vector<QVector> kernel(QMatrix a);

struct SmithResult {
    IMatrix u;            // rows x rows, unimodular
    IMatrix v;            // cols x cols, unimodular
    LatticeVector diag;   // invariant factors, length min(rows, cols)
    size_t rank = 0;      // number of nonzero invariant factors
};

// u * a * v = diag(diag). Entries kept exact; throws OverflowError on blowup.
SmithResult smith_normal_form(IMatrix a);

// Saturated integer kernel basis of a (rows = vectors of length cols).
IMatrix integer_kernel(const IMatrix& a);

} // namespace fanopot
