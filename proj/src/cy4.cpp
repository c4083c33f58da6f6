#include "fanopot/cy4.hpp"

#include "fanopot/mori.hpp"

namespace fanopot {

Int chi_x_from_degree(Int minus_k_cubed) {
    return checked_add(288, checked_mul(360, minus_k_cubed));
}

Int chi_x(const FanOps& ops) {
    DivisorClass mk(ops.ray_count(), 1);
    if (ops.c2_pair(mk) != 24)
        throw ConsistencyError("c1.c2 != 24 on a smooth complete toric 3-fold");
    return chi_x_from_degree(ops.minus_k_cubed());
}

std::optional<Int> ell_index(Int chi) {
    if (chi % 144 != 0) return std::nullopt;
    Int q = chi / 144 - 17;
    if (q < 0 || q % 5 != 0) return std::nullopt;
    return q / 5;
}

Int h11_x(Int base_h11) { return base_h11 + 1; }

bool weierstrass_smoothness_criterion(const FanOps& ops) {
    return is_ample(ops, DivisorClass(ops.ray_count(), 1));
}

bool weierstrass_smoothness_criterion(const Fan& fan) {
    return weierstrass_smoothness_criterion(FanOps(fan));
}

} // namespace fanopot
