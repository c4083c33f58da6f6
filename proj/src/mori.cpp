#include "fanopot/mori.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fanopot {

std::string to_string(ContractionKind k) {
    switch (k) {
        case ContractionKind::FiberType: return "fiber";
        case ContractionKind::Divisorial: return "divisorial";
        case ContractionKind::Small: return "small";
    }
    return "?";
}

std::string to_string(BundleKind k) {
    switch (k) {
        case BundleKind::P1Bundle: return "P1-bundle";
        case BundleKind::ConicBundle: return "conic-bundle";
        case BundleKind::Other: return "other";
    }
    return "?";
}

std::string to_string(ContractionType t) {
    switch (t) {
        case ContractionType::T291: return "2.9.1";
        case ContractionType::T292: return "2.9.2";
        case ContractionType::T293: return "2.9.3";
        case ContractionType::T294: return "2.9.4";
        case ContractionType::T295: return "2.9.5";
        case ContractionType::Unclassified: return "unclassified";
    }
    return "?";
}

CurveClass make_curve_class(const Fan& fan, LatticeVector pairing) {
    if (pairing.size() != fan.rays.size())
        throw ValidationError("curve class: pairing count != ray count");
    LatticeVector rel(fan.dim, 0);
    for (size_t i = 0; i < fan.rays.size(); ++i)
        rel = add(rel, scaled(fan.rays[i], pairing[i]));
    if (!is_zero(rel))
        throw ValidationError("curve class: sum (D_rho.Gamma) v_rho != 0");
    return CurveClass{primitive(std::move(pairing))};
}

std::vector<CurveClass> wall_curve_classes(const FanOps& ops) {
    std::vector<CurveClass> out;
    out.reserve(ops.walls().size());
    for (size_t w = 0; w < ops.walls().size(); ++w)
        out.push_back(make_curve_class(ops.fan(), ops.wall_pairing(w)));
    return out;
}

std::vector<CurveClass> mori_cone_rays(const FanOps& ops) {
    std::vector<LatticeVector> gens;
    for (const auto& c : wall_curve_classes(ops)) gens.push_back(c.pairing);
    std::vector<CurveClass> out;
    for (auto& r : extremal_rays(gens)) out.push_back(CurveClass{std::move(r)});
    return out;
}

Int k_degree(const Fan& fan, const CurveClass& c) {
    return dot(canonical_class(fan), c.pairing);
}

bool is_nef(const FanOps& ops, const DivisorClass& l) {
    for (size_t w = 0; w < ops.walls().size(); ++w)
        if (ops.curve_degree(l, w) < 0) return false;
    return true;
}

bool is_ample(const FanOps& ops, const DivisorClass& l) {
    for (size_t w = 0; w < ops.walls().size(); ++w)
        if (ops.curve_degree(l, w) <= 0) return false;
    return true;
}

bool is_nef(const Fan& fan, const DivisorClass& l) { return is_nef(FanOps(fan), l); }
bool is_ample(const Fan& fan, const DivisorClass& l) { return is_ample(FanOps(fan), l); }

std::vector<DivisorClass> nef_cone_generators(const FanOps& ops) {
    std::vector<LatticeVector> gens;
    for (const auto& c : wall_curve_classes(ops)) gens.push_back(c.pairing);
    PolyCone mori = make_cone(static_cast<int>(ops.ray_count()), std::move(gens));
    return dual_cone(mori).generators;
}

namespace {

std::vector<QVector> nef_polytope_vertices(const FanOps& ops, const DivisorClass& l) {
    const Fan& fan = ops.fan();
    const int d = fan.dim;
    const size_t n = fan.rays.size();
    std::vector<QVector> verts;
    std::vector<size_t> idx(d);
    auto feasible = [&](const QVector& m) {
        for (size_t r = 0; r < n; ++r) {
            Rational v;
            for (int i = 0; i < d; ++i) v += m[i] * Rational(fan.rays[r][i]);
            if (v < Rational(-l[r])) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, size_t start, int depth) -> void {
        if (depth == d) {
            QMatrix a(d, QVector(d));
            QVector b(d);
            for (int r = 0; r < d; ++r) {
                for (int c = 0; c < d; ++c) a[r][c] = Rational(fan.rays[idx[r]][c]);
                b[r] = Rational(-l[idx[r]]);
            }
            if (auto sol = solve_square(a, b))
                if (feasible(*sol)) verts.push_back(*sol);
            return;
        }
        for (size_t i = start; i < n; ++i) {
            idx[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return verts;
}

int affine_dim(const std::vector<QVector>& pts) {
    if (pts.empty()) return -1;
    QMatrix diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        QVector d(pts[i].size());
        for (size_t k = 0; k < d.size(); ++k) d[k] = pts[i][k] - pts[0][k];
        diffs.push_back(std::move(d));
    }
    return diffs.empty() ? 0 : static_cast<int>(rank(diffs));
}

} // namespace

int nef_polytope_dim(const FanOps& ops, const DivisorClass& l) {
    auto verts = nef_polytope_vertices(ops, l);
    if (verts.empty()) throw ConsistencyError("nef divisor with empty polytope");
    return affine_dim(verts);
}

namespace {

bool same_ray(const LatticeVector& a, const LatticeVector& b) {
    return primitive(a) == primitive(b);
}

// indices of walls whose curve class lies on the given ray
std::vector<size_t> walls_in_class(const FanOps& ops, const CurveClass& ray) {
    std::vector<size_t> out;
    for (size_t w = 0; w < ops.walls().size(); ++w)
        if (same_ray(ops.wall_pairing(w), ray.pairing)) out.push_back(w);
    return out;
}

// Build the quotient fan of a fiber-type contraction from the lattice
// directions annihilated by the face divisor's polytope.
Fan fiber_target_fan(const FanOps& ops, const DivisorClass& face, int target_dim) {
    const Fan& fan = ops.fan();
    auto verts = nef_polytope_vertices(ops, face);
    IMatrix span_rows;
    for (size_t i = 1; i < verts.size(); ++i) {
        QVector diff(verts[i].size());
        for (size_t k = 0; k < diff.size(); ++k) diff[k] = verts[i][k] - verts[0][k];
        bool zero = std::all_of(diff.begin(), diff.end(),
                                [](const Rational& x) { return x.is_zero(); });
        if (!zero) span_rows.push_back(primitive_from_rational(diff));
    }
    if (span_rows.empty()) throw ConsistencyError("fiber target: polytope is a point");
    IMatrix nf = integer_kernel(span_rows); // fiber directions in N
    if (static_cast<int>(nf.size()) != fan.dim - target_dim)
        throw ConsistencyError("fiber target: unexpected fiber-lattice rank");
    // unimodular completion: q = last target_dim rows of u with u * [nf] = [S;0]
    IMatrix cols(fan.dim, LatticeVector(nf.size()));
    for (size_t j = 0; j < nf.size(); ++j)
        for (int i = 0; i < fan.dim; ++i) cols[i][j] = nf[j][i];
    SmithResult s = smith_normal_form(cols);
    for (size_t i = 0; i < s.rank; ++i)
        if (std::abs(s.diag[i]) != 1)
            throw ConsistencyError("fiber target: fiber lattice not saturated");
    IMatrix q;
    for (int i = fan.dim - target_dim; i < fan.dim; ++i) q.push_back(s.u[i]);

    Fan target;
    target.name = fan.name + "-base";
    target.dim = target_dim;
    std::map<LatticeVector, int> ray_index;
    std::vector<int> image(fan.rays.size(), -1);
    for (size_t r = 0; r < fan.rays.size(); ++r) {
        LatticeVector w(target_dim);
        for (int i = 0; i < target_dim; ++i) w[i] = dot(q[i], fan.rays[r]);
        if (is_zero(w)) continue;
        w = primitive(w);
        auto [it, inserted] = ray_index.try_emplace(w, static_cast<int>(target.rays.size()));
        if (inserted) target.rays.push_back(w);
        image[r] = it->second;
    }
    std::set<std::vector<int>> cones;
    for (const auto& c : fan.max_cones) {
        std::set<int> img;
        for (int r : c)
            if (image[r] >= 0) img.insert(image[r]);
        if (static_cast<int>(img.size()) == target_dim)
            cones.insert(std::vector<int>(img.begin(), img.end()));
    }
    target.max_cones.assign(cones.begin(), cones.end());
    if (target_dim == 1) {
        std::vector<LatticeVector> sorted = target.rays;
        sort_lex(sorted);
        if (sorted != std::vector<LatticeVector>{{-1}, {1}})
            throw ConsistencyError("fiber target: 1-dimensional base is not P1");
        return canonical_form(target);
    }
    require_valid(target);
    return canonical_form(target);
}

// opposite pairs of the 4-cycle link: pairs not joined by a star 2-cone
std::vector<std::pair<int, int>> opposite_link_pairs(const FanOps& ops,
                                                     const SurfaceDescriptor& sd, int rho) {
    std::vector<std::pair<int, int>> out;
    const auto& link = sd.link_rays;
    for (size_t i = 0; i < link.size(); ++i)
        for (size_t j = i + 1; j < link.size(); ++j) {
            bool joined = false;
            for (const auto& c : ops.fan().max_cones) {
                if (std::find(c.begin(), c.end(), rho) == c.end()) continue;
                if (std::find(c.begin(), c.end(), link[i]) != c.end() &&
                    std::find(c.begin(), c.end(), link[j]) != c.end()) {
                    joined = true;
                    break;
                }
            }
            if (!joined) out.emplace_back(link[i], link[j]);
        }
    return out;
}

// The blow-down along a ruled ray exists iff the ray class reads
// D_a . F = D_b . F = 1, D_rho . F = -1, zero elsewhere, with
// v_a + v_b = v_rho; returns the merge pair {a, b}.
std::optional<std::pair<int, int>> t291_blowdown_pair(const FanOps& ops,
                                                      const CurveClass& ray, int rho) {
    std::vector<int> pos;
    for (size_t r = 0; r < ops.ray_count(); ++r) {
        Int v = ray.pairing[r];
        if (static_cast<int>(r) == rho) {
            if (v != -1) return std::nullopt;
        } else if (v == 1) {
            pos.push_back(static_cast<int>(r));
        } else if (v != 0) {
            return std::nullopt;
        }
    }
    if (pos.size() != 2) return std::nullopt;
    if (add(ops.fan().rays[pos[0]], ops.fan().rays[pos[1]]) != ops.fan().rays[rho])
        return std::nullopt;
    return std::make_pair(pos[0], pos[1]);
}

// Number of rulings of a 4-ray star whose curve class spans the given ray;
// opposite link walls carry numerically equivalent curves, so this counts
// opposite pairs.
int rulings_on_ray(const FanOps& ops, const SurfaceDescriptor& sd, int rho,
                   const CurveClass& ray) {
    int count = 0;
    for (auto [a, b] : opposite_link_pairs(ops, sd, rho)) {
        auto wa = ops.wall_of(rho, a);
        auto wb = ops.wall_of(rho, b);
        if (!wa || !wb) throw ConsistencyError("link pair without walls");
        bool in_a = same_ray(ops.wall_pairing(*wa), ray.pairing);
        bool in_b = same_ray(ops.wall_pairing(*wb), ray.pairing);
        if (in_a != in_b)
            throw ConsistencyError("opposite ruling curves in different classes");
        if (in_a) ++count;
    }
    return count;
}

} // namespace

ContractionInfo classify_contraction(const FanOps& ops, const CurveClass& ray) {
    const Fan& fan = ops.fan();
    if (fan.dim != 3) throw ValidationError("classify_contraction needs a 3-fold fan");
    ContractionInfo info;
    info.ray = CurveClass{primitive(ray.pairing)};
    auto rays = mori_cone_rays(ops);
    if (std::find(rays.begin(), rays.end(), info.ray) == rays.end())
        throw ValidationError("classify_contraction: class is not an extremal ray");
    info.k_deg = k_degree(fan, info.ray);
    info.negative = info.k_deg < 0;

    // Sign pattern of the wall relation: no negative coefficient means the
    // contracted curves sweep all of B (fiber type); one negative ray is the
    // exceptional divisor; two negative rays leave only the wall curve
    // itself, a small contraction.
    std::vector<int> neg;
    for (size_t r = 0; r < fan.rays.size(); ++r)
        if (info.ray.pairing[r] < 0) neg.push_back(static_cast<int>(r));

    if (neg.size() > 2)
        throw ConsistencyError("extremal ray class is not a wall relation");
    if (neg.size() == 2) {
        if (info.negative)
            throw ConsistencyError(
                "negative extremal ray with a small contraction on a smooth 3-fold");
        info.kind = ContractionKind::Small;
        return info;
    }

    if (neg.size() == 1) {
        info.kind = ContractionKind::Divisorial;
        info.exceptional_ray = neg[0];
        info.surface = star_surface(ops, neg[0]);
        info.normal_data = info.surface.normal_data;
        switch (info.surface.kind) {
            case SurfaceKind::ProjectivePlane: {
                Int k = info.normal_data[0];
                if (k == -1) {
                    info.type = ContractionType::T292;
                    info.target_smooth = true;
                } else if (k == -2) {
                    info.type = ContractionType::T293;
                    info.target_smooth = false;
                } else {
                    info.type = ContractionType::Unclassified;
                    info.target_smooth = false;
                }
                break;
            }
            case SurfaceKind::Quadric: {
                int rulings = rulings_on_ray(ops, info.surface, neg[0], info.ray);
                if (rulings == 2) {
                    // both rulings are contracted: the quadric drops to a point
                    if (info.normal_data != std::vector<Int>{-1, -1})
                        throw ConsistencyError(
                            "quadric contracted to a point without O(-1,-1) normal bundle");
                    info.type = ContractionType::T294;
                    info.target_smooth = false;
                } else if (rulings == 1) {
                    // one ruling is contracted; the image is a curve
                    info.type = ContractionType::T291;
                    info.target_smooth =
                        t291_blowdown_pair(ops, info.ray, neg[0]).has_value();
                } else {
                    throw ConsistencyError("negative quadric divisor with no ruling on the ray");
                }
                break;
            }
            case SurfaceKind::Hirzebruch: {
                if (rulings_on_ray(ops, info.surface, neg[0], info.ray) != 1)
                    throw ConsistencyError("ruled divisor without a contracted ruling");
                info.type = ContractionType::T291;
                info.target_smooth = t291_blowdown_pair(ops, info.ray, neg[0]).has_value();
                break;
            }
            default:
                info.type = ContractionType::Unclassified;
                info.target_smooth = false;
        }
        if (info.type == ContractionType::T291) {
            if (info.negative) {
                // a negative ruled ray always blows down to a smooth 3-fold
                if (!info.target_smooth)
                    throw ConsistencyError("negative 2.9.1 ray without a smooth blow-down");
                DivisorClass c(fan.rays.size(), 0);
                c[neg[0]] = 1;
                Int kc2 = ops.triple(canonical_class(fan), c, c);
                if (kc2 % 2 != 0) throw ConsistencyError("K.C^2 odd for a ruled contraction");
                info.center_genus = 1 - kc2 / 2;
                if (info.center_genus != 0)
                    throw ConsistencyError("toric ruled contraction with nonrational center");
            } else {
                // invariant centers are rational; 2.9.1's genus formula only
                // applies to negative rays
                info.center_genus = 0;
            }
        }
        return info;
    }

    // no negative divisor: fiber type; the target dimension is read off the
    // polytope of a divisor spanning the dual face of the ray
    auto nef_gens = nef_cone_generators(ops);
    DivisorClass face(fan.rays.size(), 0);
    for (const auto& g : nef_gens)
        if (dot(g, info.ray.pairing) == 0) face = add(face, g);
    if (!is_nef(ops, face)) throw ConsistencyError("face divisor not nef");
    int pdim = nef_polytope_dim(ops, face);
    if (pdim == fan.dim)
        throw ConsistencyError("all-nonnegative extremal relation with a birational face");
    info.kind = ContractionKind::FiberType;
    info.target_dim = pdim;
    if (pdim > 0) {
        info.fiber_target = fiber_target_fan(ops, face, pdim);
        info.fiber_target_name =
            pdim == 1 ? "P1" : surface_name(info.fiber_target);
    } else {
        info.fiber_target_name = "pt";
    }
    if (pdim == 2) {
        // P1-bundle iff every invariant fiber is irreducible: each wall on the
        // ray has the two-term relation v + v' = 0
        info.bundle_kind = BundleKind::P1Bundle;
        for (size_t w : walls_in_class(ops, info.ray)) {
            const Wall& wall = ops.walls()[w];
            if (!is_zero(add(fan.rays[wall.opposite_a], fan.rays[wall.opposite_b])))
                info.bundle_kind = BundleKind::ConicBundle;
        }
    }
    return info;
}

ContractionResult contract_divisorial(const FanOps& ops, const ContractionInfo& info) {
    if (info.kind != ContractionKind::Divisorial)
        throw ValidationError("contract_divisorial: not a divisorial contraction");
    switch (info.type) {
        case ContractionType::T293:
            return SingularTargetReport{info.type, "quadruple point"};
        case ContractionType::T294:
            return SingularTargetReport{info.type, "ordinary double point"};
        case ContractionType::T295:
            return SingularTargetReport{info.type, "double point"};
        case ContractionType::Unclassified:
            return SingularTargetReport{info.type, "unclassified singular target"};
        default: break;
    }
    const Fan& fan = ops.fan();
    const int rho = info.exceptional_ray;
    const auto& link = info.surface.link_rays;

    std::vector<std::vector<int>> merged;
    if (info.type == ContractionType::T292) {
        if (link.size() != 3)
            throw ConsistencyError("2.9.2 contraction with non-triangular link");
        LatticeVector s =
            add(add(fan.rays[link[0]], fan.rays[link[1]]), fan.rays[link[2]]);
        if (s != fan.rays[rho])
            throw ConsistencyError("2.9.2 contraction: ray is not the sum of its link");
        merged.push_back({link[0], link[1], link[2]});
    } else { // T291
        // the merge pair is dictated by the contracted fiber class
        auto pair = t291_blowdown_pair(ops, info.ray, rho);
        if (!pair)
            throw ConsistencyError("2.9.1 contraction: ray does not admit a smooth blow-down");
        for (int x : link) {
            if (x == pair->first || x == pair->second) continue;
            merged.push_back({pair->first, pair->second, x});
        }
    }

    Fan out;
    out.name = fan.name + "-contracted";
    out.dim = fan.dim;
    std::vector<int> remap(fan.rays.size(), -1);
    for (size_t r = 0; r < fan.rays.size(); ++r) {
        if (static_cast<int>(r) == rho) continue;
        remap[r] = static_cast<int>(out.rays.size());
        out.rays.push_back(fan.rays[r]);
    }
    for (const auto& c : fan.max_cones) {
        if (std::find(c.begin(), c.end(), rho) != c.end()) continue;
        std::vector<int> nc;
        for (int i : c) nc.push_back(remap[i]);
        std::sort(nc.begin(), nc.end());
        out.max_cones.push_back(std::move(nc));
    }
    for (const auto& c : merged) {
        std::vector<int> nc;
        for (int i : c) nc.push_back(remap[i]);
        std::sort(nc.begin(), nc.end());
        out.max_cones.push_back(std::move(nc));
    }
    std::sort(out.max_cones.begin(), out.max_cones.end());
    Fan result = canonical_form(out);
    FanDiagnostics d = validate_fan(result);
    if (!d.ok())
        throw ConsistencyError("smooth contraction produced an invalid fan: " +
                               (d.problems.empty() ? "not smooth/complete" : d.problems[0]));
    return result;
}

} // namespace fanopot
