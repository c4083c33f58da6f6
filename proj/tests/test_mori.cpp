#include <doctest.h>

#include "fanopot/builtin_fans.hpp"
#include "fanopot/mori.hpp"
#include "support/lp_oracle.hpp"

using namespace fanopot;

namespace {

Fan blowup_point_p3() { return star_subdivision(p3_fan(), {0, 1, 2}); }
Fan blowup_line_p3() { return star_subdivision(p3_fan(), {2, 3}); }

Fan p_o_o2_over_p2() {
    return proj_bundle_fan(p2_fan(), {0, 0, 2}, "P(O+O(2))/P2");
}

DivisorClass prime(const FanOps& ops, int rho) {
    DivisorClass d(ops.ray_count(), 0);
    d[rho] = 1;
    return d;
}

} // namespace

TEST_CASE("curve class relation is enforced") {
    Fan f = p2_fan();
    CHECK_NOTHROW(make_curve_class(f, {1, 1, 1}));
    CHECK_THROWS_AS(make_curve_class(f, {1, 0, 1}), ValidationError);
}

TEST_CASE("mori cone of P2 is a single ray") {
    FanOps ops(p2_fan());
    auto rays = mori_cone_rays(ops);
    REQUIRE(rays.size() == 1);
    CHECK(rays[0].pairing == LatticeVector{1, 1, 1});
    CHECK(k_degree(ops.fan(), rays[0]) == -3);
}

TEST_CASE("mori cone of Hirzebruch surfaces: fiber and negative section") {
    for (Int a = 0; a <= 3; ++a) {
        FanOps ops(hirzebruch_fan(a));
        auto rays = mori_cone_rays(ops);
        REQUIRE(rays.size() == 2);
        // fiber class: self-intersection 0 on the two fiber divisors (rays 0, 2);
        // sigma_infty class: pairs -a with its own divisor (ray 1)
        bool found_section = false, found_fiber = false;
        for (const auto& r : rays) {
            if (r.pairing[1] == -a && a > 0) found_section = true;
            if (r.pairing[0] == 0 && r.pairing[2] == 0) found_fiber = true;
        }
        CHECK(found_fiber);
        if (a > 0) CHECK(found_section);
    }
}

TEST_CASE("mori cone of P1xP1: two fiber classes") {
    FanOps ops(p1xp1_fan()); // rays (1,0),(0,1),(-1,0),(0,-1)
    auto rays = mori_cone_rays(ops);
    REQUIRE(rays.size() == 2);
    CHECK(rays[0].pairing == LatticeVector{0, 1, 0, 1});
    CHECK(rays[1].pairing == LatticeVector{1, 0, 1, 0});
}

TEST_CASE("mori cone of P1xP1xP1 has three rays") {
    FanOps ops(product_fan(p1_fan(), p1xp1_fan()));
    auto rays = mori_cone_rays(ops);
    CHECK(rays.size() == 3);
    for (const auto& r : rays) CHECK(k_degree(ops.fan(), r) == -2);
}

TEST_CASE("every wall class decomposes non-negatively in the extremal rays") {
    for (Fan fan : {p2_fan(), hirzebruch_fan(2), product_fan(p1_fan(), p1xp1_fan()),
                    blowup_point_p3(), blowup_line_p3(), p_o_o2_over_p2(),
                    product_fan(p1_fan(), hirzebruch_fan(2))}) {
        FanOps ops(fan);
        auto rays = mori_cone_rays(ops);
        std::vector<LatticeVector> gens;
        for (const auto& r : rays) gens.push_back(r.pairing);
        for (const auto& w : wall_curve_classes(ops))
            CHECK(testing::nonneg_combination_exists(gens, w.pairing));
    }
}

TEST_CASE("nef cone is the exact dual of the Mori cone") {
    for (Fan fan : {p3_fan(), blowup_point_p3(), product_fan(p1_fan(), p2_fan())}) {
        FanOps ops(fan);
        auto nef = nef_cone_generators(ops);
        // dual of the nef cone returns exactly the Mori extremal rays
        PolyCone nef_cone = make_cone(static_cast<int>(ops.ray_count()), nef);
        PolyCone dd = dual_cone(nef_cone);
        std::vector<LatticeVector> mori;
        for (const auto& r : mori_cone_rays(ops)) mori.push_back(r.pairing);
        CHECK(dd.generators == mori);
        // and each nef generator is indeed nef
        for (const auto& g : nef) CHECK(is_nef(ops, g));
    }
}

TEST_CASE("nef and ample tests") {
    FanOps p3(p3_fan());
    CHECK(is_ample(p3, DivisorClass(4, 1))); // -K = O(4)
    CHECK(is_nef(p3, DivisorClass(4, 0)));
    CHECK_FALSE(is_ample(p3, DivisorClass(4, 0)));

    FanOps f2(hirzebruch_fan(2));
    DivisorClass sigma_inf(4, 0);
    sigma_inf[1] = 1; // self-intersection -2
    CHECK_FALSE(is_nef(f2, sigma_inf));
}

TEST_CASE("classify: blow-up of P3 at a point is a 2.9.2 contraction") {
    FanOps ops(blowup_point_p3());
    auto rays = mori_cone_rays(ops);
    REQUIRE(rays.size() == 2);
    int divisorial = 0, fiber = 0;
    for (const auto& r : rays) {
        auto info = classify_contraction(ops, r);
        CHECK(info.negative);
        if (info.kind == ContractionKind::Divisorial) {
            ++divisorial;
            CHECK(info.exceptional_ray == 4);
            CHECK(info.type == ContractionType::T292);
            CHECK(info.target_smooth);
            CHECK(info.surface.kind == SurfaceKind::ProjectivePlane);
            CHECK(info.normal_data == std::vector<Int>{-1});
            auto res = contract_divisorial(ops, info);
            REQUIRE(std::holds_alternative<Fan>(res));
            Fan target = std::get<Fan>(res);
            CHECK(canonical_form(target).rays == canonical_form(p3_fan()).rays);
            CHECK(target.picard_rank() == ops.fan().picard_rank() - 1);
        } else {
            ++fiber;
            CHECK(info.kind == ContractionKind::FiberType);
            CHECK(info.target_dim == 2);
            CHECK(info.bundle_kind == BundleKind::P1Bundle);
            CHECK(info.fiber_target_name == "P2");
        }
    }
    CHECK(divisorial == 1);
    CHECK(fiber == 1);
}

TEST_CASE("classify: blow-up of P3 along a line is a 2.9.1 contraction onto P3") {
    FanOps ops(blowup_line_p3());
    bool found = false;
    for (const auto& r : mori_cone_rays(ops)) {
        auto info = classify_contraction(ops, r);
        if (info.kind != ContractionKind::Divisorial) continue;
        found = true;
        CHECK(info.type == ContractionType::T291);
        CHECK(info.center_genus == 0);
        CHECK(info.target_smooth);
        auto res = contract_divisorial(ops, info);
        REQUIRE(std::holds_alternative<Fan>(res));
        CHECK(canonical_form(std::get<Fan>(res)).rays == canonical_form(p3_fan()).rays);
    }
    CHECK(found);
}

TEST_CASE("classify: P1xP2 fiber ray is a P1-bundle over P2") {
    FanOps ops(product_fan(p1_fan(), p2_fan()));
    int p1bundles = 0;
    for (const auto& r : mori_cone_rays(ops)) {
        auto info = classify_contraction(ops, r);
        CHECK(info.kind == ContractionKind::FiberType);
        if (info.target_dim == 2) {
            ++p1bundles;
            CHECK(info.bundle_kind == BundleKind::P1Bundle);
            CHECK(info.fiber_target_name == "P2");
        } else {
            CHECK(info.target_dim == 1);
            CHECK(info.fiber_target_name == "P1");
        }
    }
    CHECK(p1bundles == 1);
}

TEST_CASE("classify: negative section of P(O+O(2)) over P2 is 2.9.3") {
    FanOps ops(p_o_o2_over_p2());
    bool found = false;
    for (const auto& r : mori_cone_rays(ops)) {
        auto info = classify_contraction(ops, r);
        if (info.kind != ContractionKind::Divisorial) continue;
        found = true;
        CHECK(info.type == ContractionType::T293);
        CHECK_FALSE(info.target_smooth);
        CHECK(info.surface.kind == SurfaceKind::ProjectivePlane);
        CHECK(info.normal_data == std::vector<Int>{-2});
        auto res = contract_divisorial(ops, info);
        REQUIRE(std::holds_alternative<SingularTargetReport>(res));
        CHECK(std::get<SingularTargetReport>(res).singularity == "quadruple point");
    }
    CHECK(found);
}

TEST_CASE("classify: P1 x F_2 has a non-negative extremal ray with a quadric divisor") {
    FanOps ops(product_fan(p1_fan(), hirzebruch_fan(2)));
    int nonneg = 0;
    for (const auto& r : mori_cone_rays(ops)) {
        auto info = classify_contraction(ops, r);
        if (info.negative) continue;
        ++nonneg;
        CHECK(info.k_deg == 0);
        CHECK(info.kind == ContractionKind::Divisorial);
        CHECK(info.surface.kind == SurfaceKind::Quadric);
        CHECK(info.normal_data == std::vector<Int>{-2, 0});
        CHECK(info.type == ContractionType::T291);
        CHECK_FALSE(info.target_smooth);
    }
    CHECK(nonneg == 1);
}

TEST_CASE("star surfaces of P3 and P1 x F_2") {
    FanOps p3(p3_fan());
    for (int r = 0; r < 4; ++r) {
        auto sd = star_surface(p3, r);
        CHECK(sd.kind == SurfaceKind::ProjectivePlane);
        CHECK(sd.normal_data == std::vector<Int>{1});
    }
    FanOps pf2(product_fan(p1_fan(), hirzebruch_fan(2)));
    // ray 3 = (0, 0, 1) is sigma_infty of F_2 lifted: divisor P1 x sigma_infty
    auto sd = star_surface(pf2, 3);
    CHECK(sd.kind == SurfaceKind::Quadric);
    CHECK(sd.normal_data == std::vector<Int>{-2, 0});
}

TEST_CASE("star normal data agrees with triple intersections") {
    for (Fan fan : {p3_fan(), blowup_point_p3(), blowup_line_p3(), p_o_o2_over_p2(),
                    product_fan(p1_fan(), hirzebruch_fan(2))}) {
        FanOps ops(fan);
        for (size_t rho = 0; rho < ops.ray_count(); ++rho) {
            auto sd = star_surface(ops, static_cast<int>(rho));
            for (int sigma : sd.link_rays) {
                DivisorClass c = prime(ops, static_cast<int>(rho));
                DivisorClass s = prime(ops, sigma);
                Int via_triple = ops.triple(c, c, s);
                Int via_wall = ops.wall_pairing(*ops.wall_of(static_cast<int>(rho), sigma))[rho];
                CHECK(via_triple == via_wall);
            }
        }
    }
}

TEST_CASE("contract_divisorial picard rank drop") {
    Fan f = star_subdivision(blowup_line_p3(), {0, 1}); // second, disjoint line
    FanOps ops(f);
    for (const auto& r : mori_cone_rays(ops)) {
        auto info = classify_contraction(ops, r);
        if (info.kind != ContractionKind::Divisorial || !info.target_smooth) continue;
        Fan t = std::get<Fan>(contract_divisorial(ops, info));
        CHECK(t.picard_rank() == f.picard_rank() - 1);
    }
}
