// Mori cone of curves, extremal rays, nef/ample tests, and the
// classification of extremal contractions on smooth complete toric 3-folds.
#pragma once

#include <variant>

#include "fanopot/star.hpp"

namespace fanopot {

// Intersection numbers (D_rho . Gamma) of a 1-cycle class against the prime
// divisors; the relation sum (D_rho . Gamma) v_rho = 0 holds exactly.
struct CurveClass {
    LatticeVector pairing;
    bool operator==(const CurveClass&) const = default;
};

CurveClass make_curve_class(const Fan& fan, LatticeVector pairing);

// One class per wall, normalized so the two opposite rays pair to 1.
std::vector<CurveClass> wall_curve_classes(const FanOps& ops);

// Extremal rays of the Mori cone (deterministic lexicographic order).
std::vector<CurveClass> mori_cone_rays(const FanOps& ops);

Int k_degree(const Fan& fan, const CurveClass& c);

bool is_nef(const FanOps& ops, const DivisorClass& l);
bool is_ample(const FanOps& ops, const DivisorClass& l);
bool is_nef(const Fan& fan, const DivisorClass& l);
bool is_ample(const Fan& fan, const DivisorClass& l);

// Generators of the dual of the Mori cone in divisor-coefficient space;
// the d linear-equivalence directions div(m) appear as +/- pairs.
std::vector<DivisorClass> nef_cone_generators(const FanOps& ops);

// dimension of the lattice polytope { m : <m, v_rho> >= -a_rho } of a nef
// divisor; equals the dimension of the image of the associated morphism
int nef_polytope_dim(const FanOps& ops, const DivisorClass& l);

enum class ContractionKind { FiberType, Divisorial, Small };
enum class BundleKind { P1Bundle, ConicBundle, Other };
enum class ContractionType { T291, T292, T293, T294, T295, Unclassified };

std::string to_string(ContractionKind k);
std::string to_string(BundleKind k);
std::string to_string(ContractionType t);

struct ContractionInfo {
    CurveClass ray;
    Int k_deg = 0;            // K_B . A for the primitive generator A
    bool negative = false;    // a negative extremal ray in the sense of 2.4
    ContractionKind kind = ContractionKind::Small;

    // fiber type
    int target_dim = -1;
    BundleKind bundle_kind = BundleKind::Other;
    Fan fiber_target;                 // quotient fan (target_dim 1 or 2)
    std::string fiber_target_name;

    // divisorial
    int exceptional_ray = -1;
    ContractionType type = ContractionType::Unclassified;
    Int center_genus = 0;             // 2.9.1: genus of the image curve
    std::vector<Int> normal_data;     // of O_C(C) on the exceptional surface
    bool target_smooth = false;
    SurfaceDescriptor surface;
};

// Classification per the extremal-contraction list; rays with k_deg >= 0 are
// classified all the same and flagged non-negative.
ContractionInfo classify_contraction(const FanOps& ops, const CurveClass& ray);

struct SingularTargetReport {
    ContractionType type = ContractionType::Unclassified;
    std::string singularity;
};

using ContractionResult = std::variant<Fan, SingularTargetReport>;

// Smooth blow-down of the exceptional ray for types 2.9.1/2.9.2; a named
// singularity report for 2.9.3/2.9.4/2.9.5.
ContractionResult contract_divisorial(const FanOps& ops, const ContractionInfo& info);

} // namespace fanopot
