#include "fanopot/cohomology.hpp"

#include <map>
#include <set>

namespace fanopot {

namespace {

// Reduced Betti numbers (over Q) of the full subcomplex of the fan's boundary
// sphere on the vertex set `mask`, indices -1..dim-1 shifted by one. Ranks of
// the boundary maps are counted through Smith normal form.
std::vector<Int> reduced_betti(const Fan& fan, uint32_t mask) {
    const int d = fan.dim;
    // faces per dimension; dimension k holds (k+1)-subsets, k = -1 stored at 0
    std::vector<std::set<std::vector<int>>> faces(d + 1);
    faces[0].insert(std::vector<int>{}); // the empty face
    for (const auto& cone : fan.max_cones) {
        std::vector<int> in;
        for (int r : cone)
            if (mask & (1u << r)) in.push_back(r);
        const size_t m = in.size();
        for (uint32_t sub = 1; sub < (1u << m); ++sub) {
            std::vector<int> f;
            for (size_t b = 0; b < m; ++b)
                if (sub & (1u << b)) f.push_back(in[b]);
            faces[f.size()].insert(std::move(f));
        }
    }
    std::vector<std::map<std::vector<int>, int>> index(d + 1);
    for (int k = 0; k <= d; ++k) {
        int i = 0;
        for (const auto& f : faces[k]) index[k][f] = i++;
    }
    // boundary maps B_k : C_k -> C_{k-1} for k = 0..d-1 (shifted: faces[k+1] -> faces[k])
    std::vector<size_t> ranks(d + 1, 0);
    for (int k = 1; k <= d; ++k) {
        if (faces[k].empty()) continue;
        IMatrix bd(faces[k - 1].size(), LatticeVector(faces[k].size(), 0));
        for (const auto& f : faces[k]) {
            int col = index[k].at(f);
            Int sign = 1;
            for (size_t drop = 0; drop < f.size(); ++drop) {
                std::vector<int> sub;
                for (size_t i = 0; i < f.size(); ++i)
                    if (i != drop) sub.push_back(f[i]);
                bd[index[k - 1].at(sub)][col] = sign;
                sign = -sign;
            }
        }
        ranks[k] = smith_normal_form(bd).rank;
    }
    std::vector<Int> betti(d + 1, 0);
    for (int k = 0; k <= d; ++k) {
        Int dim_ck = static_cast<Int>(faces[k].size());
        Int r_in = static_cast<Int>(k + 1 <= d ? ranks[k + 1] : 0);
        Int r_out = static_cast<Int>(k >= 1 ? ranks[k] : 0);
        betti[k] = dim_ck - r_in - r_out;
    }
    return betti;
}

} // namespace

std::vector<Int> line_bundle_cohomology(const FanOps& ops, const DivisorClass& l) {
    const Fan& fan = ops.fan();
    if (l.size() != fan.rays.size())
        throw ValidationError("cohomology: coefficient count != ray count");
    if (fan.rays.size() > 31) throw ValidationError("cohomology: too many rays");
    const int d = fan.dim;
    const size_t n = fan.rays.size();

    // bounding box of the arrangement vertices, found from all invertible
    // d x d subsystems <m, v_rho> = -a_rho
    std::vector<Rational> lo(d), hi(d);
    bool have_vertex = false;
    std::vector<size_t> pick(d);
    auto consider = [&](const QVector& m) {
        for (int i = 0; i < d; ++i) {
            if (!have_vertex || m[i] < lo[i]) lo[i] = m[i];
            if (!have_vertex || m[i] > hi[i]) hi[i] = m[i];
        }
        have_vertex = true;
    };
    std::vector<size_t> idx(d);
    auto rec = [&](auto&& self, size_t start, int depth) -> void {
        if (depth == d) {
            QMatrix a(d, QVector(d));
            QVector b(d);
            for (int r = 0; r < d; ++r) {
                for (int c = 0; c < d; ++c) a[r][c] = Rational(fan.rays[idx[r]][c]);
                b[r] = Rational(-l[idx[r]]);
            }
            if (auto sol = solve_square(a, b)) consider(*sol);
            return;
        }
        for (size_t i = start; i < n; ++i) {
            idx[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    if (!have_vertex)
        throw ConsistencyError("hyperplane arrangement has no vertex; fan rays do not span");

    std::vector<Int> box_lo(d), box_hi(d);
    for (int i = 0; i < d; ++i) {
        // floor / ceil of exact rationals
        Int num = lo[i].num(), den = lo[i].den();
        box_lo[i] = num >= 0 ? num / den : -((-num + den - 1) / den);
        num = hi[i].num(), den = hi[i].den();
        box_hi[i] = num >= 0 ? (num + den - 1) / den : -((-num) / den);
    }

    std::vector<Int> h(d + 1, 0);
    std::map<uint32_t, std::vector<Int>> memo;
    LatticeVector m(d);
    auto scan = [&](auto&& self, int depth) -> void {
        if (depth == d) {
            uint32_t mask = 0;
            for (size_t r = 0; r < n; ++r)
                if (dot(m, fan.rays[r]) < -l[r]) mask |= (1u << r);
            auto it = memo.find(mask);
            if (it == memo.end())
                it = memo.emplace(mask, reduced_betti(fan, mask)).first;
            for (int p = 0; p <= d; ++p) h[p] = checked_add(h[p], it->second[p]);
            return;
        }
        for (Int x = box_lo[depth]; x <= box_hi[depth]; ++x) {
            m[depth] = x;
            self(self, depth + 1);
        }
    };
    scan(scan, 0);
    return h;
}

std::vector<Int> line_bundle_cohomology(const Fan& fan, const DivisorClass& l) {
    return line_bundle_cohomology(FanOps(fan), l);
}

Int euler_characteristic(const std::vector<Int>& h) {
    Int chi = 0;
    Int sign = 1;
    for (Int x : h) {
        chi = checked_add(chi, checked_mul(sign, x));
        sign = -sign;
    }
    return chi;
}

Rational riemann_roch_chi(const FanOps& ops, const DivisorClass& l) {
    DivisorClass k = canonical_class(ops.fan());
    if (ops.dim() == 2)
        return Rational(1) + Rational(ops.pair(l, l) - ops.pair(l, k), 2);
    Int l3 = ops.triple(l, l, l);
    Int l2k = ops.triple(l, l, k);
    Int lk2 = ops.triple(l, k, k);
    Int lc2 = ops.c2_pair(l);
    return Rational(1) + Rational(l3, 6) - Rational(l2k, 4) +
           Rational(checked_add(lk2, lc2), 12);
}

} // namespace fanopot
