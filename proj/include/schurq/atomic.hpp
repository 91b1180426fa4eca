#pragma once

#include "schurq/chern.hpp"
#include "schurq/cohring.hpp"
#include "schurq/weights.hpp"

namespace schurq {

// Normalized extended Mukai vector (rank, c1-part, s). The c1-part is stored
// through its coefficient against c1(Q).
struct ExtendedMukaiVector {
    BigInt r;
    Rational l_coef;
    Rational s;
};

// atomic iff l1 == l2 == l3 or l2 == l3 == l4
bool is_atomic(const Weight4& lambda);

// (3 delta - 1)^2 - P; zero exactly when the atomicity candidate square is
// consistent with the Euler characteristic.
Rational atomic_numeric_test(const Weight4& lambda);

// v~(Sym^m Q) = r_m (1, m/4 c1(Q), -(3m-5)/4)
ExtendedMukaiVector extended_mukai_sym(int m);

// Normalized extended Mukai vector of Sigma_lambda(Q) for atomic lambda; the
// s-component is the unique value consistent with the discriminant. Throws
// for non-atomic lambda.
ExtendedMukaiVector extended_mukai(const Weight4& lambda);

// q~(r, l, s) = q(l) - 2 r s with q(c1(Q)) = 6
Rational q_tilde(const ExtendedMukaiVector& v);

// T(v~^(2)) = (r, l, (1/2r)(l^2 - (q~/30) c2X), (s/r) l^dual, s^2/2r),
// with l^dual = -(4/3) l_coef ch3. Requires r != 0.
CohClass T_squared(const ExtendedMukaiVector& v);

}  // namespace schurq
