#include <doctest.h>

#include <random>

#include "fanopot/builtin_fans.hpp"
#include "fanopot/cohomology.hpp"
#include "fanopot/intersection.hpp"

using namespace fanopot;

namespace {

Fan blowup_point_p3() { return star_subdivision(p3_fan(), {0, 1, 2}); }

DivisorClass prime(const Fan& f, int rho) {
    DivisorClass d(f.rays.size(), 0);
    d[rho] = 1;
    return d;
}

} // namespace

TEST_CASE("validate_fan accepts the standard fans") {
    for (const Fan& f : {p2_fan(), hirzebruch_fan(2), blown_p2_fan(3)}) {
        auto d = validate_fan(f);
        CHECK(d.ok());
    }
    for (const Fan& f : {p3_fan(), product_fan(p1_fan(), p2_fan()), blowup_point_p3()}) {
        auto d = validate_fan(f);
        CHECK(d.ok());
        CHECK(d.walls.size() == 3 * f.max_cones.size() / 2);
    }
}

TEST_CASE("validate_fan flags incomplete fans") {
    Fan f = p3_fan();
    f.max_cones.pop_back();
    auto d = validate_fan(f);
    CHECK(d.smooth);
    CHECK_FALSE(d.complete);
}

TEST_CASE("validate_fan flags non-smooth cones") {
    Fan f;
    f.name = "quadric-cone-like";
    f.dim = 3;
    f.rays = {{1, 0, 0}, {1, 2, 0}, {0, 0, 1}, {-1, -1, -1}, {0, -1, 0}};
    f.max_cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 4}, {1, 2, 3}, {2, 3, 4}};
    auto d = validate_fan(f);
    CHECK_FALSE(d.smooth);
}

TEST_CASE("validate_fan rejects duplicate and non-primitive rays") {
    Fan f = p3_fan();
    f.rays[1] = {2, 0, 0};
    f.rays[0] = {1, 0, 0};
    auto d = validate_fan(f);
    CHECK_FALSE(d.problems.empty());

    Fan g = p2_fan();
    g.rays.push_back({1, 0});
    auto dg = validate_fan(g);
    CHECK_FALSE(dg.problems.empty());
}

TEST_CASE("canonical class") {
    CHECK(canonical_class(p3_fan()) == DivisorClass{-1, -1, -1, -1});
    Fan p1cubed = product_fan(p1_fan(), p1xp1_fan());
    CHECK(canonical_class(p1cubed) == DivisorClass(6, -1));
}

TEST_CASE("triple intersections on P3") {
    FanOps ops(p3_fan());
    CHECK(ops.triple(prime(ops.fan(), 0), prime(ops.fan(), 1), prime(ops.fan(), 2)) == 1);
    // D1^3 = 1 via relation reduction, so (-K)^3 = 64
    CHECK(ops.triple(prime(ops.fan(), 0), prime(ops.fan(), 0), prime(ops.fan(), 0)) == 1);
    CHECK(ops.minus_k_cubed() == 64);
}

TEST_CASE("exceptional divisor of a point blow-up has E^3 = 1") {
    FanOps ops(blowup_point_p3());
    int e = 4; // the inserted ray
    CHECK(ops.fan().rays[e] == LatticeVector{1, 1, 1});
    CHECK(ops.triple(prime(ops.fan(), e), prime(ops.fan(), e), prime(ops.fan(), e)) == 1);
    CHECK(ops.minus_k_cubed() == 56);
}

TEST_CASE("pair intersections on surfaces") {
    FanOps f2(hirzebruch_fan(2));
    // sigma_infty is the ray (0,1): self-intersection -2, fiber meets it once
    CHECK(f2.pair(prime(f2.fan(), 1), prime(f2.fan(), 1)) == -2);
    CHECK(f2.pair(prime(f2.fan(), 0), prime(f2.fan(), 1)) == 1);
    CHECK(f2.pair(prime(f2.fan(), 0), prime(f2.fan(), 0)) == 0);
    FanOps p2(p2_fan());
    DivisorClass mk(3, 1);
    CHECK(p2.pair(mk, mk) == 9);
}

TEST_CASE("linear equivalence invariance of triple intersections") {
    std::mt19937 rng(40923);
    std::uniform_int_distribution<Int> coef(-3, 3);
    for (Fan fan : {p3_fan(), product_fan(p1_fan(), p2_fan()), blowup_point_p3()}) {
        FanOps ops(fan);
        const size_t n = fan.rays.size();
        for (int trial = 0; trial < 20; ++trial) {
            DivisorClass a(n), b(n), c(n);
            LatticeVector m(3);
            for (auto& v : a) v = coef(rng);
            for (auto& v : b) v = coef(rng);
            for (auto& v : c) v = coef(rng);
            for (auto& v : m) v = coef(rng);
            DivisorClass a2 = add(a, divisor_of_character(fan, m));
            CHECK(ops.triple(a, b, c) == ops.triple(a2, b, c));
        }
    }
}

TEST_CASE("c2 pairing: 12 c1.c2 = 288 on the standard 3-folds") {
    for (Fan fan : {p3_fan(), product_fan(p1_fan(), p1xp1_fan()), blowup_point_p3(),
                    product_fan(p1_fan(), p2_fan())}) {
        FanOps ops(fan);
        DivisorClass mk(fan.rays.size(), 1);
        CHECK(ops.c2_pair(mk) == 24);
        CHECK(ops.c2_pair(DivisorClass(fan.rays.size(), 0)) == 0);
    }
}

TEST_CASE("fan json round trip") {
    Fan f = product_fan(p1_fan(), hirzebruch_fan(2));
    std::string text = fan_to_json_text(f);
    Fan g = fan_from_json_text(text);
    CHECK(canonical_form(g).rays == canonical_form(f).rays);
    CHECK(canonical_form(g).max_cones == canonical_form(f).max_cones);
    CHECK_THROWS_AS(fan_from_json_text("{\"rays\": [[1.5, 0]], \"max_cones\": []}"),
                    ValidationError);
}

TEST_CASE("validate_fan names overlap and non-simplicial problems") {
    Fan overlap;
    overlap.name = "overlap";
    overlap.dim = 2;
    overlap.rays = {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}};
    overlap.max_cones = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}, {0, 4}};
    auto d = validate_fan(overlap);
    CHECK_FALSE(d.problems.empty());

    Fan big;
    big.name = "non-simplicial";
    big.dim = 3;
    big.rays = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
    big.max_cones = {{0, 1, 2, 3}};
    auto ds = validate_fan(big);
    CHECK_FALSE(ds.simplicial);
}

TEST_CASE("star_subdivision rejects a center that is not a cone") {
    // (1,0) and (-1,0) never span a cone of P1xP1
    CHECK_THROWS_AS(star_subdivision(p1xp1_fan(), {0, 2}), ValidationError);
}
