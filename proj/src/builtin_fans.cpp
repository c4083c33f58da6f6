#include "fanopot/builtin_fans.hpp"

#include <algorithm>

namespace fanopot {

Fan p1_fan() {
    Fan f;
    f.name = "P1";
    f.dim = 1;
    f.rays = {{1}, {-1}};
    f.max_cones = {{0}, {1}};
    return f;
}

Fan p2_fan() {
    Fan f;
    f.name = "P2";
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, -1}};
    f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    return f;
}

Fan p3_fan() {
    Fan f;
    f.name = "P3";
    f.dim = 3;
    f.rays = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
    f.max_cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    return f;
}

Fan hirzebruch_fan(Int a) {
    Fan f;
    f.name = a == 0 ? "P1xP1" : "F_" + std::to_string(a);
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return f;
}

Fan p1xp1_fan() { return hirzebruch_fan(0); }

Fan blown_p2_fan(int r) {
    if (r < 0 || r > 3) throw ValidationError("blown_p2_fan: r must be 0..3");
    Fan f = p2_fan();
    const std::vector<std::vector<int>> pts = {{0, 1}, {1, 2}, {0, 2}};
    for (int i = 0; i < r; ++i) f = star_subdivision(f, pts[i]);
    f.name = "S_" + std::to_string(9 - r);
    return f;
}

Fan product_fan(const Fan& a, const Fan& b) {
    Fan f;
    f.name = a.name + "x" + b.name;
    f.dim = a.dim + b.dim;
    for (const auto& r : a.rays) {
        LatticeVector v = r;
        v.resize(f.dim, 0);
        f.rays.push_back(std::move(v));
    }
    for (const auto& r : b.rays) {
        LatticeVector v(a.dim, 0);
        v.insert(v.end(), r.begin(), r.end());
        f.rays.push_back(std::move(v));
    }
    const int off = static_cast<int>(a.rays.size());
    for (const auto& ca : a.max_cones)
        for (const auto& cb : b.max_cones) {
            std::vector<int> c = ca;
            for (int i : cb) c.push_back(off + i);
            std::sort(c.begin(), c.end());
            f.max_cones.push_back(std::move(c));
        }
    return f;
}

Fan proj_bundle_fan(const Fan& base, const LatticeVector& twists, const std::string& name) {
    if (base.dim != 2) throw ValidationError("proj_bundle_fan: base must be a surface");
    if (twists.size() != base.rays.size())
        throw ValidationError("proj_bundle_fan: one twist per base ray");
    Fan f;
    f.name = name;
    f.dim = 3;
    for (size_t i = 0; i < base.rays.size(); ++i)
        f.rays.push_back({base.rays[i][0], base.rays[i][1], twists[i]});
    const int fplus = static_cast<int>(f.rays.size());
    f.rays.push_back({0, 0, 1});
    f.rays.push_back({0, 0, -1});
    for (const auto& c : base.max_cones) {
        f.max_cones.push_back({c[0], c[1], fplus});
        f.max_cones.push_back({c[0], c[1], fplus + 1});
    }
    return f;
}

Fan star_subdivision(const Fan& fan, const std::vector<int>& cone_rays) {
    std::vector<int> sigma = cone_rays;
    std::sort(sigma.begin(), sigma.end());
    LatticeVector sum(fan.dim, 0);
    for (int i : sigma) sum = add(sum, fan.rays[i]);
    sum = primitive(sum);
    Fan f;
    f.name = fan.name + "~";
    f.dim = fan.dim;
    f.rays = fan.rays;
    const int nu = static_cast<int>(f.rays.size());
    f.rays.push_back(sum);
    bool touched = false;
    for (const auto& c : fan.max_cones) {
        bool contains = std::includes(c.begin(), c.end(), sigma.begin(), sigma.end());
        if (!contains) {
            f.max_cones.push_back(c);
            continue;
        }
        touched = true;
        for (int drop : sigma) {
            std::vector<int> nc;
            for (int i : c)
                if (i != drop) nc.push_back(i);
            nc.push_back(nu);
            std::sort(nc.begin(), nc.end());
            f.max_cones.push_back(std::move(nc));
        }
    }
    if (!touched) throw ValidationError("star_subdivision: no maximal cone contains the center");
    std::sort(f.max_cones.begin(), f.max_cones.end());
    return f;
}

} // namespace fanopot
