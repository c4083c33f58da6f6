#include "fanopot/superpot.hpp"

#include <algorithm>

namespace fanopot {

std::string to_string(Verdict v) {
    return v == Verdict::Contributes ? "contributes" : "does-not-contribute";
}

std::string to_string(Reason r) {
    switch (r) {
        case Reason::Chi1AndVanishing: return "chi=1-and-vanishing";
        case Reason::ChiNot1: return "chi!=1";
        case Reason::HigherCohomology: return "higher-cohomology";
        case Reason::DeltaTrivial: return "delta-trivial";
    }
    return "?";
}

std::vector<std::pair<int, CurveClass>> candidate_non_nef_divisors(const FanOps& ops) {
    if (ops.dim() != 3) throw ValidationError("candidate enumeration needs a 3-fold fan");
    std::vector<std::pair<int, CurveClass>> out;
    for (const auto& ray : mori_cone_rays(ops)) {
        std::vector<int> neg;
        for (size_t r = 0; r < ops.ray_count(); ++r)
            if (ray.pairing[r] < 0) neg.push_back(static_cast<int>(r));
        // a negative ray on a smooth 3-fold never carries a small
        // contraction, so at most one prime divisor can pair negatively;
        // K-trivial rays can pair negatively with the two divisors through
        // the flopping curve
        if (neg.size() > 1 && k_degree(ops.fan(), ray) < 0)
            throw ConsistencyError("negative extremal ray with two non-nef prime divisors");
        for (int rho : neg) out.emplace_back(rho, ray);
    }
    return out;
}

namespace {

DivisorClass prime_class(const FanOps& ops, int rho) {
    DivisorClass d(ops.ray_count(), 0);
    d[rho] = 1;
    return d;
}

} // namespace

Int chi_of_pullback(const FanOps& ops, int rho) {
    DivisorClass c = prime_class(ops, rho);
    DivisorClass k = canonical_class(ops.fan());
    Int kc2 = ops.triple(k, c, c);
    if (kc2 % 2 != 0) throw ConsistencyError("K.C^2 is odd");
    Int chi_a = kc2 / 2;

    Int chi_plus = euler_characteristic(line_bundle_cohomology(ops, c));
    Int chi_minus = euler_characteristic(line_bundle_cohomology(ops, negated(c)));
    Int chi_b = 2 - chi_minus - chi_plus;
    if (chi_a != chi_b)
        throw ConsistencyError("chi(O_D): (1/2)K.C^2 = " + std::to_string(chi_a) +
                               " disagrees with the cohomological route " +
                               std::to_string(chi_b));
    return chi_a;
}

std::array<Int, 4> h_vector_of_pullback(const FanOps& ops, int rho) {
    // h^i(C, O_C) = (1,0,0): invariant surfaces of a smooth complete toric
    // 3-fold are smooth complete toric, hence rational
    auto hb = line_bundle_cohomology(ops, prime_class(ops, rho));
    if (hb[3] != 0)
        throw ConsistencyError("h^3(B, C) != 0 for an effective divisor on a rational base");
    if (hb[0] < 1) throw ConsistencyError("h^0(B, C) = 0 for an effective divisor");
    return {1, hb[2], hb[1], hb[0] - 1};
}

namespace {

// Is Delta|_C = (-K_B)|_C trivial on the invariant surface D_rho?
// Numerically trivial iff -K pairs to zero with every invariant curve in C.
bool discriminant_trivial_on(const FanOps& ops, int rho) {
    DivisorClass mk(ops.ray_count(), 1);
    for (size_t r = 0; r < ops.ray_count(); ++r) {
        if (auto w = ops.wall_of(rho, static_cast<int>(r)))
            if (ops.curve_degree(mk, *w) != 0) return false;
    }
    return true;
}

} // namespace

DivisorReport contribution_verdict(const FanOps& ops, int rho, const CurveClass& ray) {
    auto candidates = candidate_non_nef_divisors(ops);
    bool found = false;
    for (const auto& [r, cls] : candidates)
        if (r == rho && cls == CurveClass{primitive(ray.pairing)}) found = true;
    if (!found) throw ValidationError("divisor is nef along every extremal ray");

    DivisorReport rep;
    rep.divisor_ray = rho;
    rep.violating_ray = CurveClass{primitive(ray.pairing)};
    rep.chi = chi_of_pullback(ops, rho);
    rep.h = h_vector_of_pullback(ops, rho);
    if (rep.h[0] - rep.h[1] + rep.h[2] - rep.h[3] != rep.chi)
        throw ConsistencyError("h-vector alternating sum != chi");

    if (rep.chi == 1 && rep.h == std::array<Int, 4>{1, 0, 0, 0}) {
        rep.verdict = Verdict::Contributes;
        rep.reason = Reason::Chi1AndVanishing;
    } else {
        rep.verdict = Verdict::DoesNotContribute;
        if (rep.chi == 0 && discriminant_trivial_on(ops, rho))
            rep.reason = Reason::DeltaTrivial;
        else if (rep.chi != 1)
            rep.reason = Reason::ChiNot1;
        else
            rep.reason = Reason::HigherCohomology;
    }
    return rep;
}

BaseReport analyze_base(const FanOps& ops) {
    if (ops.dim() != 3) throw ValidationError("analyze_base needs a 3-fold fan");
    BaseReport rep;
    rep.name = ops.fan().name;
    rep.b2 = ops.fan().picard_rank();
    rep.minus_k_cubed = ops.minus_k_cubed();
    DivisorClass mk(ops.ray_count(), 1);
    rep.c1c2 = ops.c2_pair(mk);
    rep.chi_x = chi_x(ops);
    rep.ell = ell_index(rep.chi_x);
    rep.very_ample = weierstrass_smoothness_criterion(ops);
    rep.discriminant_class = DivisorClass(ops.ray_count(), 12);

    for (const auto& ray : mori_cone_rays(ops))
        rep.extremal_rays.push_back(classify_contraction(ops, ray));

    const bool fano = rep.very_ample || is_ample(ops, mk);
    for (const auto& info : rep.extremal_rays)
        if (info.kind == ContractionKind::FiberType && info.target_dim == 2)
            rep.fibrations.push_back(Fibration{info.bundle_kind, info.fiber_target_name});

    for (const auto& [rho, ray] : candidate_non_nef_divisors(ops)) {
        DivisorReport dr = contribution_verdict(ops, rho, ray);
        if (fano) {
            // Fano cross-checks: the numerical verdict must match the
            // contraction-type rule, and either chi != 1 or the h-vector
            // vanishes above degree zero (every ray is negative here, so the
            // candidate's ray carries a divisorial classification)
            const ContractionInfo* info = nullptr;
            for (const auto& e : rep.extremal_rays)
                if (e.ray == dr.violating_ray) info = &e;
            if (!info || info->kind != ContractionKind::Divisorial)
                throw ConsistencyError("Fano candidate without a divisorial ray");
            bool type_rule;
            switch (info->type) {
                case ContractionType::T292:
                case ContractionType::T293:
                case ContractionType::T294: type_rule = true; break;
                case ContractionType::T291: type_rule = info->center_genus == 0; break;
                default:
                    throw ConsistencyError("unclassified divisorial ray on a Fano base");
            }
            if (type_rule != (dr.verdict == Verdict::Contributes))
                throw ConsistencyError("verdict disagrees with the contraction-type rule");
            if (dr.chi == 1 && dr.h != std::array<Int, 4>{1, 0, 0, 0})
                throw ConsistencyError("Fano candidate with chi = 1 but higher cohomology");
        }
        rep.candidates.push_back(std::move(dr));
    }
    std::sort(rep.candidates.begin(), rep.candidates.end(),
              [](const DivisorReport& a, const DivisorReport& b) {
                  return std::tie(a.divisor_ray, a.violating_ray.pairing) <
                         std::tie(b.divisor_ray, b.violating_ray.pairing);
              });
    std::sort(rep.fibrations.begin(), rep.fibrations.end());
    return rep;
}

BaseReport analyze_base(const Fan& fan) { return analyze_base(FanOps(fan)); }

} // namespace fanopot
