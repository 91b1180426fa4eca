#include <vector>

#include "doctest.h"
#include "schurq/cohring.hpp"

using namespace schurq;
using namespace schurq::coh;

TEST_CASE("multiplication reduces through the ring relations") {
    CHECK(mul(c1(), c1()) == c1_sq());
    CHECK(mul(c1(), c1_sq()) == ch3() * Rational(-24));
    CHECK(mul(c1(), ch2()) == ch3() * Rational(2));
    CHECK(mul(c1_sq(), c1_sq()) == ch4() * Rational(144));
    CHECK(mul(c1(), ch3()) == ch4() * Rational(-6));
    CHECK(mul(c1_sq(), ch2()) == ch4() * Rational(-12));
    CHECK(mul(ch2(), ch2()) == ch4() * Rational(12));
    CHECK(mul(one(), ch_Q()) == ch_Q());
    CHECK(mul(ch4(), c1()) == zero());
}

TEST_CASE("ring axioms on the basis") {
    std::vector<CohClass> basis = {one(), c1(), c1_sq(), ch2(), ch3(), ch4()};
    for (const CohClass& x : basis)
        for (const CohClass& y : basis) {
            CHECK(mul(x, y) == mul(y, x));
            for (const CohClass& z : basis) CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
        }
}

TEST_CASE("integrals and constants") {
    CHECK(integrate(ch4()) == Rational(3, 4));
    CHECK(integrate(mul(c1_sq(), c1_sq())) == Rational(108));
    CHECK(integrate(mul(c2X(), c2X())) == Rational(828));
    CHECK(integrate(mul(ch2(), ch2())) == Rational(9));
    CHECK(integrate(mul(c1(), ch3())) == Rational(-9, 2));
    CHECK(integrate(mul(c1_sq(), ch2())) == Rational(-9));
    CHECK(integrate(point()) == Rational(1));
    CHECK(integrate(tdX()) == Rational(3));

    CHECK(c2X() == c1_sq() - ch2() * Rational(8));
    CHECK(mul(c1(), c2X()) == mul(c1(), c1_sq()) * Rational(5, 3));
    CHECK(integrate(mul(c1_sq(), c2X())) == Rational(180));
    CHECK(integrate(mul(ch2(), c2X())) == Rational(-81));
    CHECK(mul(c2X(), c2X()) == ch4() * Rational(1104));
}

TEST_CASE("duality and the mukai vector") {
    CHECK(dualize_ch(ch_Q()) == CohClass{4, -1, 0, 1, -1, 1});
    CHECK(dualize_ch(dualize_ch(ch_Q())) == ch_Q());
    CHECK(dualize_ch(one()) == one());

    CHECK(mukai_vector(one()) == sqrt_tdX());
    CHECK(mukai_vector(ch_Q()).a0 == Rational(4));
    CHECK(mul(sqrt_tdX(), sqrt_tdX()) == tdX());
}

TEST_CASE("euler pairing") {
    CHECK(euler_pairing(one(), one()) == Rational(3));
    CHECK(euler_pairing(one(), ch_Q()) == Rational(6));
    CHECK(euler_pairing(ch_Q(), ch_Q()) == Rational(3));
}

TEST_CASE("exponential of the polarization") {
    CohClass e = exp_c1(Rational(1));
    CHECK(e.a0 == Rational(1));
    CHECK(e.a1 == Rational(1));
    CHECK(e.a2 == Rational(1, 2));
    CHECK(e.a3 == Rational(0));
    CHECK(e.a4 == Rational(-4));   // c1^3/6 = -4 ch3
    CHECK(e.a5 == Rational(6));    // c1^4/24 = 6 ch4
    CHECK(mul(exp_c1(Rational(3)), exp_c1(Rational(-3))) == one());
}
