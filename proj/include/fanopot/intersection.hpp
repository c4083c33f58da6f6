// Divisor classes and exact intersection numbers on smooth complete fans.
#pragma once

#include <optional>

#include "fanopot/fan.hpp"

namespace fanopot {

// Coefficient vector a_rho for sum a_rho D_rho, aligned with fan.rays.
using DivisorClass = LatticeVector;

// K_B = -sum of all prime invariant divisors.
DivisorClass canonical_class(const Fan& fan);

// div(m) = sum <m, v_rho> D_rho, trivial in Pic.
DivisorClass divisor_of_character(const Fan& fan, const LatticeVector& m);

// Validated fan plus the caches every intersection-theoretic operation needs:
// the wall list, the wall curve pairing vectors and per-ray dual characters.
// Immutable after construction, cheap to copy by reference around.
class FanOps {
  public:
    explicit FanOps(Fan fan);

    const Fan& fan() const { return fan_; }
    int dim() const { return fan_.dim; }
    size_t ray_count() const { return fan_.rays.size(); }
    const std::vector<Wall>& walls() const { return walls_; }

    // (D_rho . V(w))_rho: 1 on the two opposite rays, the wall-relation
    // coefficients on the wall rays, 0 elsewhere.
    const LatticeVector& wall_pairing(size_t wall) const { return pairings_[wall]; }

    // A character m with <m, v_rho> = -1 vanishing on the other rays of one
    // maximal cone containing rho; exists by smoothness.
    const LatticeVector& dual_character(int rho) const { return dual_chars_[rho]; }

    bool two_cone_exists(int i, int j) const;
    std::optional<size_t> wall_of(int i, int j) const; // 3-folds: 2-cone index

    Int triple(const DivisorClass& a, const DivisorClass& b, const DivisorClass& c) const;
    Int pair(const DivisorClass& a, const DivisorClass& b) const;   // surfaces
    Int c2_pair(const DivisorClass& l) const;                        // 3-folds
    Int minus_k_cubed() const;

    // degree of D on the wall curve, dot(D, wall_pairing)
    Int curve_degree(const DivisorClass& d, size_t wall) const;

  private:
    void check_class(const DivisorClass& d, const char* what) const;

    Fan fan_;
    std::vector<Wall> walls_;
    std::vector<LatticeVector> pairings_;
    std::vector<LatticeVector> dual_chars_;
    std::vector<std::vector<int>> wall_lookup_; // ray x ray -> wall index + 1, 0 if none
};

// Convenience wrappers (validate on every call).
Int triple_intersection(const Fan& fan, const DivisorClass& a, const DivisorClass& b,
                        const DivisorClass& c);
Int pair_intersection(const Fan& fan, const DivisorClass& a, const DivisorClass& b);
Int c2_pairing(const Fan& fan, const DivisorClass& l);

} // namespace fanopot
