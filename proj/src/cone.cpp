#include "fanopot/cone.hpp"

#include <algorithm>
#include <set>

namespace fanopot {

namespace {

// Double-description state: cone = span(lines) + cone(rays), together with
// the set of already-processed constraints that vanish on each ray (used for
// the combinatorial adjacency test).
struct DDState {
    int dim;
    std::vector<LatticeVector> lines;
    std::vector<LatticeVector> rays;
    std::vector<std::set<int>> zero_sets;
};

// Intersect the state with { x : <a, x> >= 0 }, constraint index idx.
void dd_add_constraint(DDState& st, const LatticeVector& a, int idx) {
    // A line not orthogonal to the constraint becomes a ray; the remaining
    // lines and rays are shifted into the hyperplane. Shifting r by a
    // multiple of l0 leaves the values of earlier constraints unchanged
    // (lines are orthogonal to every processed constraint), so the recorded
    // zero sets stay valid.
    int pivot = -1;
    for (size_t i = 0; i < st.lines.size(); ++i)
        if (dot(a, st.lines[i]) != 0) {
            pivot = static_cast<int>(i);
            break;
        }
    if (pivot >= 0) {
        LatticeVector l0 = st.lines[pivot];
        Int p = dot(a, l0);
        if (p < 0) { l0 = negated(l0); p = -p; }
        std::vector<LatticeVector> new_lines;
        for (size_t i = 0; i < st.lines.size(); ++i) {
            if (static_cast<int>(i) == pivot) continue;
            Int q = dot(a, st.lines[i]);
            // p * line - q * l0 lies in the hyperplane
            new_lines.push_back(primitive(sub(scaled(st.lines[i], p), scaled(l0, q))));
        }
        std::vector<LatticeVector> new_rays;
        std::vector<std::set<int>> new_zeros;
        for (size_t i = 0; i < st.rays.size(); ++i) {
            Int q = dot(a, st.rays[i]);
            new_rays.push_back(primitive(sub(scaled(st.rays[i], p), scaled(l0, q))));
            auto z = st.zero_sets[i];
            z.insert(idx);
            new_zeros.push_back(std::move(z));
        }
        // the converted line lies on every hyperplane processed before idx
        std::set<int> l0_zeros;
        for (int k = 0; k < idx; ++k) l0_zeros.insert(k);
        new_rays.push_back(l0);
        new_zeros.push_back(std::move(l0_zeros));
        st.lines = std::move(new_lines);
        st.rays = std::move(new_rays);
        st.zero_sets = std::move(new_zeros);
        return;
    }

    std::vector<Int> val(st.rays.size());
    bool any_neg = false;
    for (size_t i = 0; i < st.rays.size(); ++i) {
        val[i] = dot(a, st.rays[i]);
        if (val[i] < 0) any_neg = true;
    }
    if (!any_neg) {
        for (size_t i = 0; i < st.rays.size(); ++i)
            if (val[i] == 0) st.zero_sets[i].insert(idx);
        return;
    }

    std::vector<LatticeVector> keep;
    std::vector<std::set<int>> keep_zeros;
    for (size_t i = 0; i < st.rays.size(); ++i) {
        if (val[i] < 0) continue;
        auto z = st.zero_sets[i];
        if (val[i] == 0) z.insert(idx);
        keep.push_back(st.rays[i]);
        keep_zeros.push_back(std::move(z));
    }
    // Combine adjacent (+,-) pairs into new boundary rays. Two rays are
    // adjacent iff no third ray vanishes on every constraint common to both.
    for (size_t i = 0; i < st.rays.size(); ++i) {
        if (val[i] <= 0) continue;
        for (size_t j = 0; j < st.rays.size(); ++j) {
            if (val[j] >= 0) continue;
            std::set<int> common;
            std::set_intersection(st.zero_sets[i].begin(), st.zero_sets[i].end(),
                                  st.zero_sets[j].begin(), st.zero_sets[j].end(),
                                  std::inserter(common, common.begin()));
            bool adjacent = true;
            for (size_t k = 0; k < st.rays.size() && adjacent; ++k) {
                if (k == i || k == j) continue;
                adjacent = !std::includes(st.zero_sets[k].begin(), st.zero_sets[k].end(),
                                          common.begin(), common.end());
            }
            if (!adjacent) continue;
            LatticeVector r = primitive(
                sub(scaled(st.rays[i], -val[j]), scaled(st.rays[j], -val[i])));
            auto z = common;
            z.insert(idx);
            keep.push_back(std::move(r));
            keep_zeros.push_back(std::move(z));
        }
    }
    st.rays = std::move(keep);
    st.zero_sets = std::move(keep_zeros);
}

// Extreme rays and lineality of { x : <a, x> >= 0 for all a in constraints }.
DDState dd_solve(int dim, const std::vector<LatticeVector>& constraints) {
    DDState st;
    st.dim = dim;
    for (int i = 0; i < dim; ++i) {
        LatticeVector e(dim, 0);
        e[i] = 1;
        st.lines.push_back(std::move(e));
    }
    int idx = 0;
    for (const auto& a : constraints) {
        if (is_zero(a)) continue;
        dd_add_constraint(st, a, idx++);
    }
    // dedupe rays that became identical after primitivization
    std::vector<LatticeVector> uniq;
    std::vector<std::set<int>> uz;
    for (size_t i = 0; i < st.rays.size(); ++i) {
        bool seen = false;
        for (const auto& u : uniq)
            if (u == st.rays[i]) { seen = true; break; }
        if (!seen) {
            uniq.push_back(st.rays[i]);
            uz.push_back(st.zero_sets[i]);
        }
    }
    st.rays = std::move(uniq);
    st.zero_sets = std::move(uz);
    return st;
}

std::vector<LatticeVector> dd_generators(const DDState& st) {
    std::vector<LatticeVector> gens = st.rays;
    for (const auto& l : st.lines) {
        gens.push_back(l);
        gens.push_back(negated(l));
    }
    for (auto& g : gens) g = primitive(g);
    sort_lex(gens);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // drop zero vectors (can appear when the feasible set is a point)
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const LatticeVector& v) { return is_zero(v); }),
               gens.end());
    return gens;
}

} // namespace

PolyCone make_cone(int ambient_dim, std::vector<LatticeVector> generators) {
    for (auto& g : generators) {
        if (static_cast<int>(g.size()) != ambient_dim)
            throw ValidationError("cone generator has wrong dimension");
        g = primitive(g);
    }
    generators.erase(std::remove_if(generators.begin(), generators.end(),
                                    [](const LatticeVector& v) { return is_zero(v); }),
                     generators.end());
    sort_lex(generators);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    return PolyCone{ambient_dim, std::move(generators)};
}

PolyCone dual_cone(const PolyCone& cone) {
    DDState st = dd_solve(cone.ambient_dim, cone.generators);
    return PolyCone{cone.ambient_dim, dd_generators(st)};
}

bool cone_contains(const PolyCone& cone, const LatticeVector& v) {
    // v lies in the cone iff it satisfies every supporting inequality; the
    // dual's generator list encodes lines as +/- pairs, so equalities are
    // enforced as two opposite inequalities.
    PolyCone dual = dual_cone(cone);
    for (const auto& u : dual.generators)
        if (dot(u, v) < 0) return false;
    return true;
}

bool contains_line(const PolyCone& cone) {
    if (cone.generators.empty()) return false;
    // pointed <=> the dual cone is full-dimensional
    PolyCone dual = dual_cone(cone);
    IMatrix m(dual.generators.begin(), dual.generators.end());
    return rank(m) < static_cast<size_t>(cone.ambient_dim);
}

std::vector<LatticeVector> extremal_rays(const std::vector<LatticeVector>& generators) {
    if (generators.empty()) throw ValidationError("extremal_rays: empty generator list");
    const int dim = static_cast<int>(generators[0].size());
    PolyCone cone = make_cone(dim, generators);
    if (cone.generators.empty()) return {};
    if (contains_line(cone)) throw NotStrictlyConvex();
    std::vector<LatticeVector> rays;
    for (size_t i = 0; i < cone.generators.size(); ++i) {
        std::vector<LatticeVector> others;
        for (size_t j = 0; j < cone.generators.size(); ++j)
            if (j != i) others.push_back(cone.generators[j]);
        if (others.empty() || !cone_contains(make_cone(dim, others), cone.generators[i]))
            rays.push_back(cone.generators[i]);
    }
    return rays; // already lex-sorted via make_cone
}

bool is_unimodular(const std::vector<LatticeVector>& vectors) {
    if (vectors.empty()) throw ValidationError("is_unimodular: empty input");
    const size_t d = vectors[0].size();
    if (vectors.size() != d) throw ValidationError("is_unimodular: need dim-many vectors");
    for (const auto& v : vectors)
        if (v.size() != d) throw ValidationError("is_unimodular: dimension mismatch");
    Int dt = det_integer(IMatrix(vectors.begin(), vectors.end()));
    return dt == 1 || dt == -1;
}

} // namespace fanopot
