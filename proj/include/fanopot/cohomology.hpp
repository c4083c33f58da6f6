// Exact sheaf cohomology of line bundles on smooth complete toric varieties.
#pragma once

#include "fanopot/intersection.hpp"

namespace fanopot {

// (h^0, ..., h^dim) of O_B(L), computed degree by degree: the weight-m piece
// of H^p is the reduced cohomology H~^{p-1} of the full subcomplex of the
// boundary sphere on the rays with <m, v_rho> < -a_rho. Weights are
// enumerated over the lattice points of the bounding box of the vertices of
// the hyperplane arrangement { <m, v_rho> = -a_rho }; unbounded chambers
// cannot contribute (their contribution would be infinite-dimensional).
std::vector<Int> line_bundle_cohomology(const FanOps& ops, const DivisorClass& l);
std::vector<Int> line_bundle_cohomology(const Fan& fan, const DivisorClass& l);

Int euler_characteristic(const std::vector<Int>& h);

// chi(B, L) by Riemann-Roch: on a 3-fold
//   chi(O_B) + L^3/6 - L^2.K/4 + L.(K^2 + c2)/12,
// on a surface chi(O_B) + L.(L - K)/2; chi(O_B) = 1 here.
Rational riemann_roch_chi(const FanOps& ops, const DivisorClass& l);

} // namespace fanopot
