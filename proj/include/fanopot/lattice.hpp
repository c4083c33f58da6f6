// Lattice vectors: points of N or M, curve/divisor coefficient vectors.
#pragma once

#include <algorithm>
#include <vector>

#include "fanopot/ints.hpp"

namespace fanopot {

using LatticeVector = std::vector<Int>;
using QVector = std::vector<Rational>;

inline bool is_zero(const LatticeVector& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

inline Int dot(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) throw ValidationError("dot: dimension mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

inline Int content(const LatticeVector& v) {
    Int g = 0;
    for (Int x : v) g = gcd_nonneg(g, x);
    return g;
}

// Divide by the gcd of the entries. The zero vector stays zero.
inline LatticeVector primitive(LatticeVector v) {
    Int g = content(v);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

inline LatticeVector negated(LatticeVector v) {
    for (Int& x : v) x = -x;
    return v;
}

inline LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) throw ValidationError("add: dimension mismatch");
    LatticeVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

inline LatticeVector sub(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) throw ValidationError("sub: dimension mismatch");
    LatticeVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

inline LatticeVector scaled(const LatticeVector& a, Int c) {
    LatticeVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], c);
    return r;
}

// Clears denominators and reduces to primitive integer form.
inline LatticeVector primitive_from_rational(const QVector& v) {
    Int lcm = 1;
    for (const Rational& x : v) {
        Int d = x.den();
        lcm = checked_mul(lcm / gcd_nonneg(lcm, d), d);
    }
    LatticeVector r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = checked_mul(v[i].num(), lcm / v[i].den());
    return primitive(r);
}

// std::vector's lexicographic order is the canonical generator order everywhere.
inline void sort_lex(std::vector<LatticeVector>& vs) { std::sort(vs.begin(), vs.end()); }

} // namespace fanopot
