#include "schurq/cohring.hpp"

namespace schurq {

CohClass CohClass::operator+(const CohClass& o) const {
    return {a0 + o.a0, a1 + o.a1, a2 + o.a2, a3 + o.a3, a4 + o.a4, a5 + o.a5};
}

CohClass CohClass::operator-(const CohClass& o) const {
    return {a0 - o.a0, a1 - o.a1, a2 - o.a2, a3 - o.a3, a4 - o.a4, a5 - o.a5};
}

CohClass CohClass::operator*(const Rational& s) const {
    return {a0 * s, a1 * s, a2 * s, a3 * s, a4 * s, a5 * s};
}

std::string CohClass::to_string() const {
    return "(" + a0.to_string() + ", " + a1.to_string() + ", " + a2.to_string() + ", " +
           a3.to_string() + ", " + a4.to_string() + ", " + a5.to_string() + ")";
}

namespace coh {

CohClass zero() { return {}; }
CohClass one() { return {1, 0, 0, 0, 0, 0}; }
CohClass c1() { return {0, 1, 0, 0, 0, 0}; }
CohClass c1_sq() { return {0, 0, 1, 0, 0, 0}; }
CohClass ch2() { return {0, 0, 0, 1, 0, 0}; }
CohClass ch3() { return {0, 0, 0, 0, 1, 0}; }
CohClass ch4() { return {0, 0, 0, 0, 0, 1}; }

// Relations on the very general fourfold:
//   c1^3 = -24 ch3        c1.ch2 = 2 ch3
//   c1^4 = 144 ch4        c1.ch3 = -6 ch4
//   c1^2.ch2 = -12 ch4    ch2^2 = 12 ch4
CohClass mul(const CohClass& x, const CohClass& y) {
    CohClass r;
    r.a0 = x.a0 * y.a0;
    r.a1 = x.a0 * y.a1 + x.a1 * y.a0;
    r.a2 = x.a0 * y.a2 + x.a2 * y.a0 + x.a1 * y.a1;
    r.a3 = x.a0 * y.a3 + x.a3 * y.a0;
    // degree 6: c1 * (c1^2, ch2) on either side
    r.a4 = x.a0 * y.a4 + x.a4 * y.a0
         + (x.a1 * y.a2 + x.a2 * y.a1) * Rational(-24)
         + (x.a1 * y.a3 + x.a3 * y.a1) * Rational(2);
    // degree 8: c1 * ch3, c1^2 * c1^2, c1^2 * ch2, ch2 * ch2
    r.a5 = x.a0 * y.a5 + x.a5 * y.a0
         + (x.a1 * y.a4 + x.a4 * y.a1) * Rational(-6)
         + x.a2 * y.a2 * Rational(144)
         + (x.a2 * y.a3 + x.a3 * y.a2) * Rational(-12)
         + x.a3 * y.a3 * Rational(12);
    return r;
}

Rational integrate(const CohClass& x) { return x.a5 * Rational(3, 4); }

CohClass c2X() { return {0, 0, 1, -8, 0, 0}; }

CohClass point() { return {0, 0, 0, 0, 0, Rational(4, 3)}; }

CohClass tdX() {
    // (1, 0, c2X/12, 0, 3p)
    return one() + c2X() * Rational(1, 12) + point() * Rational(3);
}

CohClass sqrt_tdX() {
    return one() + c2X() * Rational(1, 24) + point() * Rational(25, 32);
}

CohClass dualize_ch(const CohClass& ch) {
    return {ch.a0, -ch.a1, ch.a2, ch.a3, -ch.a4, ch.a5};
}

CohClass mukai_vector(const CohClass& ch) { return mul(ch, sqrt_tdX()); }

Rational euler_pairing(const CohClass& chE, const CohClass& chF) {
    return integrate(mul(mul(dualize_ch(chE), chF), tdX()));
}

CohClass exp_c1(const Rational& k) {
    CohClass kc1 = c1() * k;
    CohClass acc = one();
    CohClass term = one();
    Rational fact(1);
    for (int j = 1; j <= 4; ++j) {
        term = mul(term, kc1);
        fact *= Rational(j);
        acc = acc + term * (Rational(1) / fact);
    }
    return acc;
}

CohClass ch_Q() { return {4, 1, 0, 1, 1, 1}; }

}  // namespace coh

}  // namespace schurq
