// The superpotential-contribution algorithm for divisors pulled back from
// the base: enumerate non-nef prime divisors along extremal rays, compute
// chi(O_D) and the h-vector of D = pi*(C) on the base, and render verdicts.
#pragma once

#include <array>
#include <optional>

#include "fanopot/cohomology.hpp"
#include "fanopot/cy4.hpp"
#include "fanopot/mori.hpp"

namespace fanopot {

enum class Verdict { Contributes, DoesNotContribute };
enum class Reason { Chi1AndVanishing, ChiNot1, HigherCohomology, DeltaTrivial };

std::string to_string(Verdict v);
std::string to_string(Reason r);

struct DivisorReport {
    int divisor_ray = -1;          // C = D_rho
    CurveClass violating_ray;      // extremal ray with C . R < 0
    Int chi = 0;                   // chi(O_D)
    std::array<Int, 4> h{};        // h-vector of O_D
    Verdict verdict = Verdict::DoesNotContribute;
    Reason reason = Reason::ChiNot1;
};

struct Fibration {
    BundleKind kind = BundleKind::P1Bundle;
    std::string target;
    bool operator<(const Fibration& o) const {
        return std::tie(target, kind) < std::tie(o.target, o.kind);
    }
};

struct BaseReport {
    std::string name;
    int b2 = 0;
    Int minus_k_cubed = 0;
    Int c1c2 = 0;
    Int chi_x = 0;
    std::optional<Int> ell;
    bool very_ample = false;
    std::vector<ContractionInfo> extremal_rays;
    std::vector<DivisorReport> candidates;   // all non-nef candidates with verdicts
    std::vector<Fibration> fibrations;       // P1-fibrations and conic bundles
    DivisorClass discriminant_class;         // 12 Delta = -12 K_B

    size_t contributing_count() const {
        size_t n = 0;
        for (const auto& c : candidates)
            if (c.verdict == Verdict::Contributes) ++n;
        return n;
    }
};

// All pairs (rho, R): R an extremal ray, D_rho . R < 0. At most one rho per
// ray on a smooth toric 3-fold (checked).
std::vector<std::pair<int, CurveClass>> candidate_non_nef_divisors(const FanOps& ops);

// chi(O_D) for D = pi*(D_rho), computed both as (1/2) K_B . C^2 and as
// 2 - chi(O_B(-C)) - chi(O_B(C)); the two routes must agree exactly.
Int chi_of_pullback(const FanOps& ops, int rho);

// (h^0,...,h^3) of O_D from the base cohomology of O_B(C).
std::array<Int, 4> h_vector_of_pullback(const FanOps& ops, int rho);

DivisorReport contribution_verdict(const FanOps& ops, int rho, const CurveClass& ray);

BaseReport analyze_base(const FanOps& ops);
BaseReport analyze_base(const Fan& fan);

} // namespace fanopot
