#include "fanopot/intersection.hpp"

namespace fanopot {

DivisorClass canonical_class(const Fan& fan) {
    return DivisorClass(fan.rays.size(), -1);
}

DivisorClass divisor_of_character(const Fan& fan, const LatticeVector& m) {
    DivisorClass d(fan.rays.size());
    for (size_t i = 0; i < fan.rays.size(); ++i) d[i] = dot(m, fan.rays[i]);
    return d;
}

namespace {

LatticeVector compute_dual_character(const Fan& fan, int rho) {
    for (const auto& cone : fan.max_cones) {
        if (std::find(cone.begin(), cone.end(), rho) == cone.end()) continue;
        // solve <m, v_tau> = -delta_{tau,rho} over the cone basis
        QMatrix a(fan.dim, QVector(fan.dim));
        QVector b(fan.dim);
        for (int r = 0; r < fan.dim; ++r) {
            for (int c = 0; c < fan.dim; ++c) a[r][c] = Rational(fan.rays[cone[r]][c]);
            b[r] = Rational(cone[r] == rho ? -1 : 0);
        }
        auto sol = solve_square(a, b);
        if (!sol) throw ConsistencyError("degenerate maximal cone in dual_character");
        LatticeVector m(fan.dim);
        for (int i = 0; i < fan.dim; ++i) m[i] = (*sol)[i].as_integer();
        return m;
    }
    throw ValidationError("ray belongs to no maximal cone");
}

LatticeVector compute_wall_pairing(const Fan& fan, const Wall& wall) {
    // Wall relation: v_a + v_b + sum_{rho in w} lambda_rho v_rho = 0 on smooth
    // complete fans; the curve pairings read off the coefficients.
    const int d = fan.dim;
    QMatrix a(d, QVector(d));
    std::vector<int> basis = wall.rays;
    basis.push_back(wall.opposite_a);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) a[r][c] = Rational(fan.rays[basis[c]][r]);
    QVector rhs(d);
    for (int r = 0; r < d; ++r) rhs[r] = Rational(fan.rays[wall.opposite_b][r]);
    auto sol = solve_square(a, rhs);
    if (!sol) throw ConsistencyError("degenerate wall");
    if ((*sol)[d - 1].as_integer() != -1)
        throw ConsistencyError("wall relation coefficient of the opposite ray is not -1");
    LatticeVector pairing(fan.rays.size(), 0);
    pairing[wall.opposite_a] = 1;
    pairing[wall.opposite_b] = 1;
    for (size_t i = 0; i < wall.rays.size(); ++i)
        pairing[wall.rays[i]] = -(*sol)[i].as_integer();
    return pairing;
}

} // namespace

FanOps::FanOps(Fan fan) : fan_(std::move(fan)) {
    walls_ = require_valid(fan_);
    pairings_.reserve(walls_.size());
    for (const auto& w : walls_) pairings_.push_back(compute_wall_pairing(fan_, w));
    dual_chars_.reserve(fan_.rays.size());
    for (size_t i = 0; i < fan_.rays.size(); ++i)
        dual_chars_.push_back(compute_dual_character(fan_, static_cast<int>(i)));
    const size_t n = fan_.rays.size();
    wall_lookup_.assign(n, std::vector<int>(n, 0));
    if (fan_.dim == 3) {
        for (size_t w = 0; w < walls_.size(); ++w) {
            int i = walls_[w].rays[0], j = walls_[w].rays[1];
            wall_lookup_[i][j] = wall_lookup_[j][i] = static_cast<int>(w) + 1;
        }
    } else {
        // surfaces: record adjacency through the maximal 2-cones
        for (const auto& c : fan_.max_cones)
            wall_lookup_[c[0]][c[1]] = wall_lookup_[c[1]][c[0]] = 1;
    }
}

void FanOps::check_class(const DivisorClass& d, const char* what) const {
    if (d.size() != fan_.rays.size())
        throw ValidationError(std::string(what) + ": coefficient count != ray count");
}

bool FanOps::two_cone_exists(int i, int j) const { return wall_lookup_[i][j] != 0; }

std::optional<size_t> FanOps::wall_of(int i, int j) const {
    if (fan_.dim != 3 || wall_lookup_[i][j] == 0) return std::nullopt;
    return static_cast<size_t>(wall_lookup_[i][j] - 1);
}

Int FanOps::curve_degree(const DivisorClass& d, size_t wall) const {
    return dot(d, pairings_[wall]);
}

Int FanOps::triple(const DivisorClass& a, const DivisorClass& b, const DivisorClass& c) const {
    if (fan_.dim != 3) throw ValidationError("triple intersection needs a 3-fold fan");
    check_class(a, "triple");
    check_class(b, "triple");
    check_class(c, "triple");
    const size_t n = fan_.rays.size();

    // Expand B.C into a cycle supported on wall curves; a repeated factor is
    // reduced through D_rho ~ D_rho + div(m) with <m, v_rho> = -1, which kills
    // the diagonal term. Pairing the cycle against A is then exact.
    std::vector<Int> cycle(walls_.size(), 0);
    auto add_wall = [&](int i, int j, Int coeff) {
        if (coeff == 0) return;
        if (auto w = wall_of(i, j)) cycle[*w] = checked_add(cycle[*w], coeff);
    };
    for (size_t i = 0; i < n; ++i) {
        if (b[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (c[j] == 0) continue;
            Int bc = checked_mul(b[i], c[j]);
            if (i != j) {
                add_wall(static_cast<int>(i), static_cast<int>(j), bc);
            } else {
                const LatticeVector& m = dual_chars_[i];
                for (size_t t = 0; t < n; ++t) {
                    if (t == i) continue;
                    Int mt = dot(m, fan_.rays[t]);
                    if (mt != 0) add_wall(static_cast<int>(i), static_cast<int>(t),
                                          checked_mul(bc, mt));
                }
            }
        }
    }
    Int total = 0;
    for (size_t w = 0; w < walls_.size(); ++w)
        if (cycle[w] != 0)
            total = checked_add(total, checked_mul(cycle[w], dot(a, pairings_[w])));
    return total;
}

Int FanOps::pair(const DivisorClass& a, const DivisorClass& b) const {
    if (fan_.dim != 2) throw ValidationError("pair intersection needs a surface fan");
    check_class(a, "pair");
    check_class(b, "pair");
    const size_t n = fan_.rays.size();
    Int total = 0;
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            Int dij = 0;
            if (i != j) {
                dij = two_cone_exists(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0;
            } else {
                const LatticeVector& m = dual_chars_[i];
                for (size_t t = 0; t < n; ++t) {
                    if (t == i) continue;
                    Int mt = dot(m, fan_.rays[t]);
                    if (mt != 0 && two_cone_exists(static_cast<int>(i), static_cast<int>(t)))
                        dij = checked_add(dij, mt);
                }
            }
            total = checked_add(total, checked_mul(checked_mul(a[i], b[j]), dij));
        }
    }
    return total;
}

Int FanOps::c2_pair(const DivisorClass& l) const {
    if (fan_.dim != 3) throw ValidationError("c2 pairing needs a 3-fold fan");
    check_class(l, "c2_pair");
    Int total = 0;
    for (const auto& p : pairings_) total = checked_add(total, dot(l, p));
    return total;
}

Int FanOps::minus_k_cubed() const {
    DivisorClass mk(fan_.rays.size(), 1);
    return triple(mk, mk, mk);
}

Int triple_intersection(const Fan& fan, const DivisorClass& a, const DivisorClass& b,
                        const DivisorClass& c) {
    return FanOps(fan).triple(a, b, c);
}

Int pair_intersection(const Fan& fan, const DivisorClass& a, const DivisorClass& b) {
    return FanOps(fan).pair(a, b);
}

Int c2_pairing(const Fan& fan, const DivisorClass& l) {
    return FanOps(fan).c2_pair(l);
}

} // namespace fanopot
