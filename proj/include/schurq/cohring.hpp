#pragma once

#include <array>
#include <string>

#include "schurq/rational.hpp"

namespace schurq {

// Element of the six-dimensional algebraic cohomology subring of the very
// general Fano variety of lines, in the fixed basis
//   { 1 ; c1 ; c1^2 , ch2 ; ch3 ; ch4 }     (degrees 0, 2, 4, 4, 6, 8)
// where c1, ch2, ch3, ch4 are the Chern character components of Q.
struct CohClass {
    Rational a0, a1, a2, a3, a4, a5;

    friend bool operator==(const CohClass&, const CohClass&) = default;

    CohClass operator+(const CohClass& o) const;
    CohClass operator-(const CohClass& o) const;
    CohClass operator*(const Rational& s) const;

    std::string to_string() const;
};

namespace coh {

CohClass zero();
CohClass one();
CohClass c1();
CohClass c1_sq();
CohClass ch2();
CohClass ch3();
CohClass ch4();

// graded product, reduced to the fixed basis; degrees above 8 vanish
CohClass mul(const CohClass& x, const CohClass& y);

// evaluation against the fundamental class; the degree-8 normalization is
// int ch4 = 3/4
Rational integrate(const CohClass& x);

CohClass c2X();       // c1^2 - 8 ch2
CohClass tdX();       // (1, 0, c2X/12, 0, 3 p)
CohClass sqrt_tdX();  // (1, 0, c2X/24, 0, 25/32 p)
CohClass point();     // p, the class with int p = 1

// Chern character of the dual: sign flip in degrees 2 and 6.
CohClass dualize_ch(const CohClass& ch);

// v(F) = ch(F) sqrt(td_X)
CohClass mukai_vector(const CohClass& ch);

// chi(E,F) = int ch(E)^dual ch(F) td_X
Rational euler_pairing(const CohClass& chE, const CohClass& chF);

// exp(k c1) truncated to the ring
CohClass exp_c1(const Rational& k);

// ch(Q) = (4, c1, ch2, ch3, ch4)
CohClass ch_Q();

}  // namespace coh

}  // namespace schurq
