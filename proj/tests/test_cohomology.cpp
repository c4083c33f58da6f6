#include <doctest.h>

#include <random>

#include "fanopot/builtin_fans.hpp"
#include "fanopot/cohomology.hpp"

using namespace fanopot;

TEST_CASE("structure sheaf has h = (1,0,...,0)") {
    for (Fan fan : {p3_fan(), product_fan(p1_fan(), p2_fan())}) {
        auto h = line_bundle_cohomology(fan, DivisorClass(fan.rays.size(), 0));
        CHECK(h == std::vector<Int>{1, 0, 0, 0});
    }
    auto h2 = line_bundle_cohomology(p2_fan(), DivisorClass(3, 0));
    CHECK(h2 == std::vector<Int>{1, 0, 0});
}

TEST_CASE("P3: canonical and hyperplane classes") {
    Fan f = p3_fan();
    CHECK(line_bundle_cohomology(f, canonical_class(f)) == std::vector<Int>{0, 0, 0, 1});
    CHECK(line_bundle_cohomology(f, DivisorClass{1, 0, 0, 0}) ==
          std::vector<Int>{4, 0, 0, 0});
    CHECK(line_bundle_cohomology(f, DivisorClass{2, 0, 0, 0}) ==
          std::vector<Int>{10, 0, 0, 0});
    // O(-1), O(-2), O(-3) have no cohomology at all on P3
    for (Int k = 1; k <= 3; ++k)
        CHECK(line_bundle_cohomology(f, DivisorClass{-k, 0, 0, 0}) ==
              std::vector<Int>{0, 0, 0, 0});
}

TEST_CASE("P1xP1 Kunneth spot checks") {
    Fan f = p1xp1_fan(); // rays (1,0),(0,1),(-1,0),(0,-1)
    // class -2 * D_{(1,0)}: h^1 = h^1(P1, O(-2)) = 1
    CHECK(line_bundle_cohomology(f, DivisorClass{-2, 0, 0, 0}) ==
          std::vector<Int>{0, 1, 0});
    CHECK(line_bundle_cohomology(f, DivisorClass{-2, -2, 0, 0}) ==
          std::vector<Int>{0, 0, 1});
    CHECK(line_bundle_cohomology(f, DivisorClass{1, 2, 0, 0}) ==
          std::vector<Int>{6, 0, 0});
}

TEST_CASE("Serre duality and Riemann-Roch on random small divisors") {
    std::mt19937 rng(90125);
    std::uniform_int_distribution<Int> coef(-3, 3);
    std::vector<Fan> fans = {p3_fan(), product_fan(p1_fan(), p1xp1_fan()),
                             star_subdivision(p3_fan(), {0, 1, 2})};
    for (const Fan& fan : fans) {
        FanOps ops(fan);
        DivisorClass k = canonical_class(fan);
        const size_t n = fan.rays.size();
        for (int trial = 0; trial < 25; ++trial) {
            DivisorClass l(n);
            for (auto& v : l) v = coef(rng);
            auto h = line_bundle_cohomology(ops, l);
            auto hd = line_bundle_cohomology(ops, sub(k, l));
            for (int i = 0; i <= 3; ++i) CHECK(h[i] == hd[3 - i]);
            CHECK(Rational(euler_characteristic(h)) == riemann_roch_chi(ops, l));
        }
    }
}

TEST_CASE("Riemann-Roch on surfaces matches the chamber method") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<Int> coef(-3, 3);
    for (Fan fan : {p2_fan(), hirzebruch_fan(1), hirzebruch_fan(2), blown_p2_fan(3)}) {
        FanOps ops(fan);
        const size_t n = fan.rays.size();
        for (int trial = 0; trial < 25; ++trial) {
            DivisorClass l(n);
            for (auto& v : l) v = coef(rng);
            auto h = line_bundle_cohomology(ops, l);
            CHECK(Rational(euler_characteristic(h)) == riemann_roch_chi(ops, l));
            auto hd = line_bundle_cohomology(ops, sub(canonical_class(fan), l));
            for (int i = 0; i <= 2; ++i) CHECK(h[i] == hd[2 - i]);
        }
    }
}

TEST_CASE("chi(O_B) = c1.c2 / 24 = 1 on 3-folds") {
    for (Fan fan : {p3_fan(), product_fan(p1_fan(), blown_p2_fan(2))}) {
        FanOps ops(fan);
        DivisorClass mk(fan.rays.size(), 1);
        CHECK(ops.c2_pair(mk) == 24);
        CHECK(riemann_roch_chi(ops, DivisorClass(fan.rays.size(), 0)).as_integer() == 1);
    }
}
