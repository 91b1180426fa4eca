#include "schurq/atomic.hpp"

#include <stdexcept>

namespace schurq {

bool is_atomic(const Weight4& lambda) {
    if (!lambda.partition()) throw std::invalid_argument("is_atomic: not a partition");
    return (lambda[0] == lambda[1] && lambda[1] == lambda[2]) ||
           (lambda[1] == lambda[2] && lambda[2] == lambda[3]);
}

Rational atomic_numeric_test(const Weight4& lambda) {
    LambdaPolys lp = lambda_polys(lambda);
    Rational q = Rational(3) * lp.delta - Rational(1);
    return q * q - lp.P;
}

ExtendedMukaiVector extended_mukai_sym(int m) {
    if (m < 0) throw std::invalid_argument("extended_mukai_sym: negative power");
    BigInt r = BigInt::binomial(static_cast<unsigned>(m + 3), 3);
    Rational rq(r);
    return {r, Rational(m, 4) * rq, Rational(-(3 * static_cast<std::int64_t>(m) - 5), 4) * rq};
}

ExtendedMukaiVector extended_mukai(const Weight4& lambda) {
    if (!is_atomic(lambda))
        throw std::invalid_argument("extended_mukai: " + lambda.to_string() + " is not atomic");
    CohClass ch = ch_schur_closed(lambda);
    Rational r = ch.a0;
    Rational ell = ch.a1 / r;  // effective slope, twists included
    Rational delta = delta_general(lambda);
    // forced by Delta(E) = (q~ + (5/2) r^2)/30 c2X and q~ = 6 (ell r)^2 - 2 r s
    Rational s = r * (Rational(12) * ell * ell - Rational(15) * delta + Rational(5)) / Rational(4);
    return {r.to_integer(), ch.a1, s};
}

Rational q_tilde(const ExtendedMukaiVector& v) {
    return Rational(6) * v.l_coef * v.l_coef - Rational(2) * Rational(v.r) * v.s;
}

CohClass T_squared(const ExtendedMukaiVector& v) {
    if (v.r.is_zero()) throw std::domain_error("T_squared: rank 0 has no normalization");
    Rational r(v.r);
    Rational q = q_tilde(v);
    CohClass out;
    out.a0 = r;
    out.a1 = v.l_coef;
    // (1/2r)(l^2 - (q~/30) c2X) with l^2 = l_coef^2 c1^2, c2X = c1^2 - 8 ch2
    out.a2 = (v.l_coef * v.l_coef - q / Rational(30)) / (Rational(2) * r);
    out.a3 = q * Rational(8, 30) / (Rational(2) * r);
    // (s/r) l^dual, l^dual = -(4/3) l_coef ch3
    out.a4 = v.s / r * Rational(-4, 3) * v.l_coef;
    // s^2/(2r) times the point class p = (4/3) ch4
    out.a5 = v.s * v.s / (Rational(2) * r) * Rational(4, 3);
    return out;
}

}  // namespace schurq
