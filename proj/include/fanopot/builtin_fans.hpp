// Constructors for the standard fans: projective spaces, Hirzebruch surfaces,
// products, projectivized rank-2 bundles and star subdivisions (blow-ups).
#pragma once

#include "fanopot/fan.hpp"

namespace fanopot {

Fan p1_fan();
Fan p2_fan();
Fan p3_fan();
Fan hirzebruch_fan(Int a);           // F_a; a = 0 is P1 x P1
Fan p1xp1_fan();

// Toric del Pezzo: P2 blown up at r <= 3 invariant points.
Fan blown_p2_fan(int r);

Fan product_fan(const Fan& a, const Fan& b);

// P(O + O(D)) over a smooth complete surface, D = sum twist_rho D_rho.
// Base rays are lifted to (v_rho, twist_rho); fiber rays are (0,0,+-1).
Fan proj_bundle_fan(const Fan& base, const LatticeVector& twists, const std::string& name);

// Star subdivision at the cone spanned by the given rays: inserts the
// primitive sum and splits every maximal cone containing them.
Fan star_subdivision(const Fan& fan, const std::vector<int>& cone_rays);

} // namespace fanopot
