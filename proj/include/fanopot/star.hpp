// Isomorphism type and normal-bundle data of the invariant surfaces D_rho
// inside a smooth complete toric 3-fold, read off the star fan of the ray.
#pragma once

#include "fanopot/intersection.hpp"

namespace fanopot {

enum class SurfaceKind { ProjectivePlane, Quadric, Hirzebruch, P1BundleOverP1, Other };

std::string to_string(SurfaceKind k);

struct SurfaceDescriptor {
    SurfaceKind kind = SurfaceKind::Other;
    Int hirzebruch_a = 0;          // only for kind == Hirzebruch
    // degrees of O_{D_rho}(D_rho) on invariant curves: [k] on P2; the sorted
    // bidegree on the quadric; [fiber degree, negative-section degree] on F_a
    std::vector<Int> normal_data;
    std::vector<int> link_rays;    // fan ray indices adjacent to rho
    Fan star;                      // the 2-dimensional quotient fan
};

SurfaceDescriptor star_surface(const FanOps& ops, int rho);

// Human name of a smooth complete toric surface: P2, P1xP1, F_a, or S_k
// (12 - #rays) when -K is ample, otherwise a generic label.
std::string surface_name(const Fan& surface);

} // namespace fanopot
