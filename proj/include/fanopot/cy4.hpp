// Invariants of the smooth Weierstrass Calabi-Yau 4-fold over a base 3-fold.
#pragma once

#include <optional>

#include "fanopot/intersection.hpp"

namespace fanopot {

// chi(X) = 12 c1.c2 + 360 c1^3 with c1.c2 = 24, i.e. 288 + 360 (-K)^3.
Int chi_x_from_degree(Int minus_k_cubed);

// Same, from a fan; raises ConsistencyError unless c1.c2 = 24.
Int chi_x(const FanOps& ops);

// ell with chi = 144 (17 + 5 ell), when integral and non-negative.
std::optional<Int> ell_index(Int chi);

Int h11_x(Int base_h11);

// Crude smoothness criterion for the Weierstrass model: -K_B very ample,
// tested as ampleness (smooth complete toric).
bool weierstrass_smoothness_criterion(const FanOps& ops);
bool weierstrass_smoothness_criterion(const Fan& fan);

} // namespace fanopot
