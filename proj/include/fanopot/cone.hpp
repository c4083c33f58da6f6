// Polyhedral cone primitives over exact arithmetic: duality by the double
// description method, extremal rays, membership.
#pragma once

#include <vector>

#include "fanopot/linalg.hpp"

namespace fanopot {

// Cone generated over R>=0 by primitive integer rays. A line through the
// origin is represented by the pair of opposite rays. Generators are kept
// primitive, deduplicated and lexicographically sorted, so equality of cones
// with equal generator sets is structural equality. The zero-dimensional
// cone is the empty generator list.
struct PolyCone {
    int ambient_dim = 0;
    std::vector<LatticeVector> generators;

    bool operator==(const PolyCone& o) const = default;
};

PolyCone make_cone(int ambient_dim, std::vector<LatticeVector> generators);

// { u : <u, v> >= 0 for all v in cone }, minimal generators (lines as +/- pairs).
PolyCone dual_cone(const PolyCone& cone);

// True iff v is a non-negative combination of the generators.
bool cone_contains(const PolyCone& cone, const LatticeVector& v);

bool contains_line(const PolyCone& cone);

struct NotStrictlyConvex : ValidationError {
    NotStrictlyConvex() : ValidationError("not strictly convex: cone contains a line") {}
};

// Minimal generating subset of a strictly convex cone, canonically ordered.
// Throws NotStrictlyConvex when the generated cone contains a line.
std::vector<LatticeVector> extremal_rays(const std::vector<LatticeVector>& generators);

// True iff the d vectors form a lattice basis (determinant +/-1).
bool is_unimodular(const std::vector<LatticeVector>& vectors);

} // namespace fanopot
