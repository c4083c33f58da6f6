// (-1)-curve classes on del Pezzo surfaces in the blow-up basis of P^2,
// and the induced contribution counts for bases P^1 x S_k.
#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fanopot/ints.hpp"

namespace fanopot {

// e = d H - sum a_i E_i with e^2 = -1 and -K.e = 1.
struct DelPezzoClass {
    Int d = 0;
    std::vector<Int> a;

    Int self_intersection() const;
    Int canonical_degree() const; // 3d - sum a_i
    bool operator<(const DelPezzoClass& o) const {
        return std::tie(d, a) < std::tie(o.d, o.a);
    }
    bool operator==(const DelPezzoClass& o) const = default;
};

struct MinusOneCurves {
    bool infinite = false;           // r = 9: K^2 = 0, infinitely many classes
    std::vector<DelPezzoClass> classes;
};

// All (-1)-classes on P^2 blown up at r general points, 0 <= r <= 9, by
// bounded exhaustive search (bounds from Cauchy-Schwarz on the constraints).
MinusOneCurves minus_one_curves(int r);

// What the contribution analysis yields for B = P^1 x S_k without a fan:
// every (-1)-curve of S_k gives a 2.9.1 divisor isomorphic to P1 x P1.
struct P1xDelPezzoReport {
    int k = 0;
    bool infinite = false;          // k = 0: rational elliptic surface regime
    Int contributing = 0;           // |minus_one_curves(9-k)|
    Int minus_k_cubed = 0;          // 6k
    Int chi_x = 0;                  // 288 + 2160 k
    Int h11_b = 0;                  // 11 - k
    bool very_ample = false;        // deg S_k >= 3
    std::string fibration_target;   // S_k
};

P1xDelPezzoReport p1_times_delpezzo_report(int k);

} // namespace fanopot
