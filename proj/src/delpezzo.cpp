#include "fanopot/delpezzo.hpp"

#include <algorithm>

#include "fanopot/cy4.hpp"

namespace fanopot {

Int DelPezzoClass::self_intersection() const {
    Int s = checked_mul(d, d);
    for (Int x : a) s = checked_sub(s, checked_mul(x, x));
    return s;
}

Int DelPezzoClass::canonical_degree() const {
    Int s = checked_mul(3, d);
    for (Int x : a) s = checked_sub(s, x);
    return s;
}

MinusOneCurves minus_one_curves(int r) {
    if (r < 0 || r > 9) throw ValidationError("minus_one_curves: r must be 0..9");
    MinusOneCurves out;
    if (r == 9) {
        // K^2 = 0: the classes form infinitely many sections of the
        // rational elliptic surface
        out.infinite = true;
        return out;
    }
    // d^2 - sum a_i^2 = -1, 3d - sum a_i = 1. Cauchy-Schwarz gives
    // (3d-1)^2 <= r (d^2+1), so (9-r) d^2 - 6d + (1-r) <= 0.
    Int dmax = 0;
    while ((9 - r) * (dmax + 1) * (dmax + 1) - 6 * (dmax + 1) + (1 - r) <= 0) ++dmax;
    std::vector<Int> a(r);
    for (Int d = 0; d <= dmax; ++d) {
        auto rec = [&](auto&& self, int i, Int sum_left, Int sq_left) -> void {
            const int left = r - i;
            if (left == 0) {
                if (sum_left == 0 && sq_left == 0)
                    out.classes.push_back(DelPezzoClass{d, a});
                return;
            }
            // remaining entries must reach sum_left with squares sq_left
            if (sq_left < 0) return;
            if (checked_mul(sum_left, sum_left) > checked_mul(sq_left, left)) return;
            Int bound = 0;
            while (checked_mul(bound + 1, bound + 1) <= sq_left) ++bound;
            for (Int v = -bound; v <= bound; ++v) {
                a[i] = v;
                self(self, i + 1, sum_left - v, sq_left - v * v);
            }
        };
        rec(rec, 0, 3 * d - 1, d * d + 1);
    }
    std::sort(out.classes.begin(), out.classes.end());
    out.classes.erase(std::unique(out.classes.begin(), out.classes.end()),
                      out.classes.end());
    for (const auto& c : out.classes) {
        if (c.self_intersection() != -1 || c.canonical_degree() != 1)
            throw ConsistencyError("enumerated class violates the (-1) constraints");
    }
    return out;
}

P1xDelPezzoReport p1_times_delpezzo_report(int k) {
    if (k < 0 || k > 9) throw ValidationError("p1_times_delpezzo_report: k must be 0..9");
    P1xDelPezzoReport rep;
    rep.k = k;
    rep.fibration_target = "S_" + std::to_string(k);
    rep.minus_k_cubed = 6 * k;
    rep.chi_x = chi_x_from_degree(rep.minus_k_cubed);
    rep.h11_b = 11 - k;
    rep.very_ample = k >= 3;
    auto curves = minus_one_curves(9 - k);
    rep.infinite = curves.infinite;
    rep.contributing = static_cast<Int>(curves.classes.size());
    return rep;
}

} // namespace fanopot
