// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exits nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "fanopot/builtin_fans.hpp"
#include "fanopot/delpezzo.hpp"
#include "fanopot/serialize.hpp"
#include "support/lp_oracle.hpp"

#ifndef FANOPOT_DATA_DIR
#define FANOPOT_DATA_DIR "data"
#endif

using namespace fanopot;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion-" << criterion << "  " << what;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<FanoRecord>& records() {
    static const auto recs = load_records(std::string(FANOPOT_DATA_DIR) + "/catalog.json");
    return recs;
}

// 1. engine chi equals the printed column on every toric row of the rank
//    2..5 tables, exactly; whole toric suite under 10 s
void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    int rows = 0;
    for (const auto& rec : records()) {
        if (!rec.toric_symbol || !rec.chi_x || rec.has_erratum("chi_X")) continue;
        EngineRow row = engine_row(*rec.toric_symbol);
        ++rows;
        if (row.chi != *rec.chi_x) {
            ok = false;
            detail = rec.mm_id.str() + ": engine " + std::to_string(row.chi) + " vs printed " +
                     std::to_string(*rec.chi_x);
        }
    }
    double dt = seconds_since(t0);
    if (rows < 17) { ok = false; detail = "only " + std::to_string(rows) + " toric rows"; }
    if (dt >= 10.0) { ok = false; detail = "runtime " + std::to_string(dt) + "s"; }
    report(1, "Euler characteristics of all toric rows (exact, < 10 s)", ok,
           detail.empty() ? std::to_string(rows) + " rows in " + std::to_string(dt) + "s" : detail);
}

// 2. c1.c2 = 24 on every built-in fan
void criterion_2() {
    bool ok = true;
    std::string detail;
    for (const auto& e : toric_fano_table()) {
        FanOps ops(e.fan);
        Int c = ops.c2_pair(DivisorClass(ops.ray_count(), 1));
        if (c != 24) {
            ok = false;
            detail = e.symbol + ": c1.c2 = " + std::to_string(c);
        }
    }
    report(2, "Chern identity c1.c2 = 24 on all built-in fans", ok, detail);
}

// 3. verdicts on toric rows match the tables up to the documented errata
void criterion_3() {
    TableCheck check = check_tables(records());
    bool ok = true;
    std::string detail;
    for (const auto& d : check.diffs)
        if (!d.documented) {
            ok = false;
            detail = d.row + "/" + d.field;
        }
    bool saw_236 = false, saw_312 = false;
    for (const auto& d : check.diffs) {
        if (d.row == "2-36" && d.field == "contributions") saw_236 = true;
        if (d.row == "3-12" && d.field == "chi_X") saw_312 = true;
    }
    if (!saw_236 || !saw_312) {
        ok = false;
        detail = "expected documented errata rows missing";
    }
    // the named examples: 2-35 one D2 -> P3, 2-33 one D1 -> P3, 3-27 none,
    // 3-28 one D1
    auto expect_row = [&](const char* symbol,
                          std::vector<std::pair<int, std::string>> want) {
        EngineRow row = engine_row(symbol);
        std::sort(want.begin(), want.end());
        if (row.contributing != want) {
            ok = false;
            detail = std::string(symbol) + ": unexpected contributing list";
        }
    };
    expect_row("F_3", {{2, "P3"}});
    expect_row("F_5", {{1, "P3"}});
    expect_row("F_6", {});
    expect_row("F_9", {{1, "2-34"}});
    report(3, "contributing divisors match the tables (documented errata only)", ok,
           detail.empty() ? std::to_string(check.diffs.size()) + " documented diffs" : detail);
}

// 4. (-1)-curve counts 10, 16, 27, 56, 240 and the infinite marker; < 5 s
void criterion_4() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::pair<int, Int>> expect = {
        {4, 10}, {5, 16}, {6, 27}, {7, 56}, {8, 240}};
    bool ok = true;
    std::string detail;
    for (auto [r, n] : expect) {
        auto mc = minus_one_curves(r);
        if (mc.infinite || static_cast<Int>(mc.classes.size()) != n) {
            ok = false;
            detail = "r=" + std::to_string(r) + ": " + std::to_string(mc.classes.size());
        }
    }
    if (!minus_one_curves(9).infinite) { ok = false; detail = "r=9 not infinite"; }
    double dt = seconds_since(t0);
    if (dt >= 5.0) { ok = false; detail = "runtime " + std::to_string(dt) + "s"; }
    report(4, "del Pezzo (-1)-curve counts 10/16/27/56/240 and r=9 infinite (< 5 s)", ok,
           detail.empty() ? std::to_string(dt) + "s" : detail);
}

// 5. P1 x F_n family: chi = n, h-vectors, contributes iff n = 1
void criterion_5() {
    bool ok = true;
    std::string detail;
    for (Int n = 1; n <= 5; ++n) {
        FanOps ops(product_fan(p1_fan(), hirzebruch_fan(n)));
        auto cands = candidate_non_nef_divisors(ops);
        if (cands.size() != 1) { ok = false; detail = "n=" + std::to_string(n) + " candidates"; break; }
        auto rep = contribution_verdict(ops, cands[0].first, cands[0].second);
        bool want_contrib = (n == 1);
        if (rep.chi != n) { ok = false; detail = "chi(n=" + std::to_string(n) + ") = " + std::to_string(rep.chi); }
        if ((rep.verdict == Verdict::Contributes) != want_contrib) { ok = false; detail = "verdict at n=" + std::to_string(n); }
        if (n == 1 && rep.h != std::array<Int, 4>{1, 0, 0, 0}) { ok = false; detail = "h at n=1"; }
        if (n == 2 && rep.h != std::array<Int, 4>{1, 0, 1, 0}) { ok = false; detail = "h at n=2"; }
    }
    report(5, "P1 x F_n: chi = n, h-vectors at n=1,2, contributes iff n=1 (n=1..5)", ok, detail);
}

// 6. (1/2) K.C^2 = 2 - chi(O(C)) - chi(O(-C)) for every prime divisor on
//    every built-in fan (raised internally as a consistency error)
void criterion_6() {
    bool ok = true;
    std::string detail;
    int checked = 0;
    for (const auto& e : toric_fano_table()) {
        FanOps ops(e.fan);
        for (size_t rho = 0; rho < ops.ray_count(); ++rho) {
            try {
                chi_of_pullback(ops, static_cast<int>(rho));
                ++checked;
            } catch (const std::exception& ex) {
                ok = false;
                detail = e.symbol + " ray " + std::to_string(rho) + ": " + ex.what();
            }
        }
    }
    report(6, "two-formula chi oracle on every prime divisor of every built-in fan", ok,
           detail.empty() ? std::to_string(checked) + " divisors" : detail);
}

// 7. Serre duality + Riemann-Roch for >= 200 random divisors with
//    coefficients in [-3, 3]; < 60 s
void criterion_7() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(424242);
    std::uniform_int_distribution<Int> coef(-3, 3);
    bool ok = true;
    std::string detail;
    int tested = 0;
    std::vector<Fan> fans = {p3_fan(), product_fan(p1_fan(), p1xp1_fan()),
                             star_subdivision(p3_fan(), {0, 1, 2})};
    for (const Fan& fan : fans) {
        FanOps ops(fan);
        DivisorClass k = canonical_class(fan);
        for (int trial = 0; trial < 70 && ok; ++trial) {
            DivisorClass l(fan.rays.size());
            for (auto& v : l) v = coef(rng);
            auto h = line_bundle_cohomology(ops, l);
            auto hd = line_bundle_cohomology(ops, sub(k, l));
            for (int i = 0; i <= 3; ++i)
                if (h[i] != hd[3 - i]) { ok = false; detail = "Serre duality"; }
            if (Rational(euler_characteristic(h)) != riemann_roch_chi(ops, l)) {
                ok = false;
                detail = "Riemann-Roch";
            }
            ++tested;
        }
    }
    double dt = seconds_since(t0);
    if (tested < 200) { ok = false; detail = "only " + std::to_string(tested); }
    if (dt >= 60.0) { ok = false; detail = "runtime " + std::to_string(dt) + "s"; }
    report(7, "Serre duality + Riemann-Roch on 210 random divisors (< 60 s)", ok,
           detail.empty() ? std::to_string(tested) + " divisors in " + std::to_string(dt) + "s"
                          : detail);
}

// 8. Mori-cone sanity: ray counts on P2, F_a, (P1)^3; wall decomposition;
//    nef cone = exact dual
void criterion_8() {
    bool ok = true;
    std::string detail;
    if (mori_cone_rays(FanOps(p2_fan())).size() != 1) { ok = false; detail = "P2"; }
    for (Int a = 1; a <= 4; ++a) {
        FanOps ops(hirzebruch_fan(a));
        auto rays = mori_cone_rays(ops);
        bool fiber = false, section = false;
        for (const auto& r : rays) {
            if (r.pairing[0] == 0 && r.pairing[2] == 0) fiber = true;
            if (r.pairing[1] == -a) section = true;
        }
        if (rays.size() != 2 || !fiber || !section) { ok = false; detail = "F_" + std::to_string(a); }
    }
    if (mori_cone_rays(FanOps(product_fan(p1_fan(), p1xp1_fan()))).size() != 3) {
        ok = false;
        detail = "(P1)^3";
    }
    for (Fan fan : {p3_fan(), product_fan(p1_fan(), p2_fan()),
                    star_subdivision(p3_fan(), {2, 3}), builtin_toric_fano("F_16")}) {
        FanOps ops(fan);
        auto rays = mori_cone_rays(ops);
        std::vector<LatticeVector> gens;
        for (const auto& r : rays) gens.push_back(r.pairing);
        for (const auto& w : wall_curve_classes(ops))
            if (!testing::nonneg_combination_exists(gens, w.pairing)) {
                ok = false;
                detail = fan.name + ": wall decomposition";
            }
        PolyCone nef = make_cone(static_cast<int>(ops.ray_count()), nef_cone_generators(ops));
        if (dual_cone(nef).generators != gens) {
            ok = false;
            detail = fan.name + ": nef dual";
        }
    }
    report(8, "Mori-cone sanity: ray counts, wall decomposition, nef cone duality", ok, detail);
}

// 9. genus identity over the rank-2 table's ruled edges with named targets
void criterion_9() {
    bool ok = true;
    std::string detail;
    int edges = 0;
    for (const auto& rec : records()) {
        if (rec.mm_id.b2 != 2) continue;
        for (const auto& c : rec.extremal_data) {
            if (c.type != 1 || !c.target) continue;
            if (!c.center_degree) { ok = false; detail = rec.mm_id.str() + ": no center degree"; continue; }
            GenusCheck g = genus_identity_check(rec, c, records());
            ++edges;
            if (!g.ok || g.genus != 0) {
                ok = false;
                detail = rec.mm_id.str() + ": " + g.note;
            }
        }
    }
    if (edges < 14) { ok = false; detail = "only " + std::to_string(edges) + " edges"; }
    report(9, "genus identity: integral g = 0 on all named ruled edges of the rank-2 table",
           ok, detail.empty() ? std::to_string(edges) + " edges" : detail);
}

// 10. every very-ample row quantizes as chi = 144(17 + 5 ell) with ell in
//     the stated set
void criterion_10() {
    bool ok = true;
    std::string detail;
    std::set<Int> allowed;
    for (Int l = 0; l <= 25; ++l) allowed.insert(l);
    allowed.insert(28);
    allowed.insert(29);
    for (const auto& rec : records()) {
        if (!rec.very_ample) continue;
        Int chi = chi_x_from_degree(rec.minus_k_cubed);
        auto ell = ell_index(chi);
        if (!ell || !allowed.count(*ell)) {
            ok = false;
            detail = rec.mm_id.str() + ": chi " + std::to_string(chi);
        }
    }
    // the index-1 sinks quantize too (P3 realizes ell = 29)
    for (const auto& [name, deg] : b2_one_targets()) {
        auto ell = ell_index(chi_x_from_degree(deg));
        if (!ell || !allowed.count(*ell)) {
            ok = false;
            detail = name;
        }
    }
    report(10, "ell quantization chi = 144(17 + 5 ell) on every very-ample row", ok, detail);
}

} // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " FAILURES")
              << "  (" << seconds_since(t0) << "s total)\n";
    return failures == 0 ? 0 : 1;
}
