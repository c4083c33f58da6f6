#include "fanopot/star.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fanopot {

std::string to_string(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::ProjectivePlane: return "P2";
        case SurfaceKind::Quadric: return "P1xP1";
        case SurfaceKind::Hirzebruch: return "Hirzebruch";
        case SurfaceKind::P1BundleOverP1: return "P1-bundle/P1";
        case SurfaceKind::Other: return "other";
    }
    return "other";
}

namespace {

// Unimodular map N -> Z^2 with kernel Z v; rows 2,3 of a GL_3(Z) matrix
// sending v to +-e1.
IMatrix quotient_projection(const LatticeVector& v) {
    IMatrix col = {{v[0]}, {v[1]}, {v[2]}};
    SmithResult s = smith_normal_form(col);
    if (s.rank != 1 || std::abs(s.diag[0]) != 1)
        throw ConsistencyError("quotient_projection: ray not primitive");
    return {s.u[1], s.u[2]};
}

LatticeVector project(const IMatrix& q, const LatticeVector& v) {
    return {dot(q[0], v), dot(q[1], v)};
}

} // namespace

SurfaceDescriptor star_surface(const FanOps& ops, int rho) {
    const Fan& fan = ops.fan();
    if (fan.dim != 3) throw ValidationError("star_surface needs a 3-fold fan");
    SurfaceDescriptor sd;

    std::set<int> link;
    std::vector<std::vector<int>> star_cones;
    for (const auto& c : fan.max_cones) {
        if (std::find(c.begin(), c.end(), rho) == c.end()) continue;
        std::vector<int> rest;
        for (int i : c)
            if (i != rho) rest.push_back(i);
        link.insert(rest.begin(), rest.end());
        star_cones.push_back(std::move(rest));
    }
    sd.link_rays.assign(link.begin(), link.end());

    IMatrix q = quotient_projection(fan.rays[rho]);
    Fan star;
    star.name = fan.name + "/ray" + std::to_string(rho);
    star.dim = 2;
    std::map<int, int> star_index;
    for (int s : sd.link_rays) {
        LatticeVector w = project(q, fan.rays[s]);
        if (primitive(w) != w)
            throw ConsistencyError("star ray not primitive; fan not smooth along the star");
        star_index[s] = static_cast<int>(star.rays.size());
        star.rays.push_back(std::move(w));
    }
    for (const auto& c : star_cones) {
        std::vector<int> sc = {star_index.at(c[0]), star_index.at(c[1])};
        std::sort(sc.begin(), sc.end());
        star.max_cones.push_back(std::move(sc));
    }
    std::sort(star.max_cones.begin(), star.max_cones.end());
    sd.star = star;
    FanOps star_ops(star);

    // degree of the normal bundle O_{D_rho}(D_rho) on each invariant curve
    // V(rho, sigma), read from the wall relation
    std::map<int, Int> deg;
    for (int s : sd.link_rays) {
        auto w = ops.wall_of(rho, s);
        if (!w) throw ConsistencyError("star link pair is not a wall");
        deg[s] = ops.wall_pairing(*w)[rho];
    }

    const size_t n = sd.link_rays.size();
    if (n == 3) {
        sd.kind = SurfaceKind::ProjectivePlane;
        Int k = deg.begin()->second;
        for (const auto& [s, v] : deg)
            if (v != k) throw ConsistencyError("P2 star with non-constant normal degree");
        sd.normal_data = {k};
        return sd;
    }
    if (n == 4) {
        // smooth complete with 4 rays: a Hirzebruch surface; self-intersections
        // inside the star are {0, 0, -a, a}
        std::vector<Int> self(n);
        Int a = 0;
        for (size_t i = 0; i < n; ++i) {
            DivisorClass d(n, 0);
            d[i] = 1;
            self[i] = star_ops.pair(d, d);
            a = std::max(a, std::abs(self[i]));
        }
        auto opposite = [&](size_t i) -> size_t {
            for (size_t j = 0; j < n; ++j)
                if (j != i && !star_ops.two_cone_exists(static_cast<int>(i), static_cast<int>(j)))
                    return j;
            throw ConsistencyError("4-ray star without an opposite pair");
        };
        if (a == 0) {
            sd.kind = SurfaceKind::Quadric;
            // opposite curves are the two rulings; their normal degrees agree
            std::vector<Int> bideg;
            std::set<size_t> done;
            for (size_t i = 0; i < n; ++i) {
                if (done.count(i)) continue;
                size_t j = opposite(i);
                done.insert(i);
                done.insert(j);
                Int di = deg.at(sd.link_rays[i]), dj = deg.at(sd.link_rays[j]);
                if (di != dj)
                    throw ConsistencyError("quadric star with unequal ruling degrees");
                bideg.push_back(di);
            }
            std::sort(bideg.begin(), bideg.end());
            sd.normal_data = bideg;
            return sd;
        }
        sd.kind = SurfaceKind::Hirzebruch;
        sd.hirzebruch_a = a;
        Int fiber_deg = 0, section_deg = 0;
        bool have_fiber = false;
        for (size_t i = 0; i < n; ++i) {
            Int d = deg.at(sd.link_rays[i]);
            if (self[i] == 0) {
                if (have_fiber && d != fiber_deg)
                    throw ConsistencyError("ruled star with unequal fiber degrees");
                fiber_deg = d;
                have_fiber = true;
            } else if (self[i] == -a) {
                section_deg = d;
            }
        }
        sd.normal_data = {fiber_deg, section_deg};
        return sd;
    }
    sd.kind = SurfaceKind::Other;
    for (int s : sd.link_rays) sd.normal_data.push_back(deg.at(s));
    std::sort(sd.normal_data.begin(), sd.normal_data.end());
    return sd;
}

std::string surface_name(const Fan& surface) {
    if (surface.dim != 2) throw ValidationError("surface_name needs a surface fan");
    const size_t n = surface.rays.size();
    if (n == 3) return "P2";
    FanOps ops{surface};
    if (n == 4) {
        Int a = 0;
        for (size_t i = 0; i < n; ++i) {
            DivisorClass d(n, 0);
            d[i] = 1;
            a = std::max(a, std::abs(ops.pair(d, d)));
        }
        return a == 0 ? "P1xP1" : "F_" + std::to_string(a);
    }
    // del Pezzo check: -K positive on every invariant curve
    DivisorClass mk(n, 1);
    bool ample = true;
    for (size_t i = 0; i < n; ++i) {
        DivisorClass d(n, 0);
        d[i] = 1;
        if (ops.pair(mk, d) <= 0) ample = false;
    }
    if (ample && n <= 9) return "S_" + std::to_string(12 - n);
    return "toric-surface-" + std::to_string(n) + "rays";
}

} // namespace fanopot
