#include <random>

#include "doctest.h"
#include "schurq/bigint.hpp"
#include "schurq/rational.hpp"

using namespace schurq;

TEST_CASE("bigint basic arithmetic") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-42).to_string() == "-42");
    CHECK((BigInt(1000000000) * BigInt(1000000000)).to_string() == "1000000000000000000");
    CHECK(BigInt("123456789012345678901234567890").to_string() ==
          "123456789012345678901234567890");
    CHECK((BigInt("100000000000000000000") - BigInt(1)).to_string() == "99999999999999999999");
    CHECK(BigInt(-7) + BigInt(7) == BigInt(0));
    CHECK(BigInt(std::numeric_limits<std::int64_t>::min()).to_string() == "-9223372036854775808");
}

TEST_CASE("bigint division matches int64 semantics") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> pick(-1000000000000LL, 1000000000000LL);
    std::uniform_int_distribution<std::int64_t> small(-2000000000LL, 2000000000LL);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t a = pick(rng), b = pick(rng);
        if (b == 0) continue;
        CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
        CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
        std::int64_t x = small(rng), y = small(rng);
        CHECK((BigInt(x) * BigInt(y) + BigInt(x)).to_int64() == x * y + x);
    }
}

TEST_CASE("bigint division on wide operands") {
    BigInt a = BigInt::pow(BigInt(10), 40) + BigInt(12345);
    BigInt b = BigInt::pow(BigInt(10), 17) + BigInt(7);
    BigInt q = a / b, r = a % b;
    CHECK(q * b + r == a);
    CHECK(r >= BigInt(0));
    CHECK(r < b);
}

TEST_CASE("bigint division invariants on random wide operands") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> limbs(1, 6);
    std::uniform_int_distribution<std::int64_t> digit(0, 999999999);
    auto random_big = [&] {
        BigInt v(0);
        int n = limbs(rng);
        for (int i = 0; i < n; ++i) v = v * BigInt(1000000000) + BigInt(digit(rng));
        return rng() % 2 ? v : -v;
    };
    for (int i = 0; i < 500; ++i) {
        BigInt a = random_big(), b = random_big();
        if (b.is_zero()) continue;
        BigInt q = a / b, r = a % b;
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.signum() == a.signum());
    }
}

TEST_CASE("bigint combinatorial helpers") {
    CHECK(BigInt::factorial(12).to_string() == "479001600");
    CHECK(BigInt::binomial(13, 3) == BigInt(286));
    CHECK(BigInt::binomial(5, 9) == BigInt(0));
    CHECK(BigInt::gcd(BigInt(462), BigInt(-1071)) == BigInt(21));
    CHECK(BigInt::pow(BigInt(3), 20).to_string() == "3486784401");
}

TEST_CASE("rational arithmetic is reduced and exact") {
    Rational a(1, 3), b(1, 6);
    CHECK((a + b) == Rational(1, 2));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 18));
    CHECK((a / b) == Rational(2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6).to_string() == "-2/3");
    CHECK(Rational::parse("-22/7") == Rational(-22, 7));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).to_integer() == BigInt(2));
    CHECK_THROWS(Rational(1, 3).to_integer());
    CHECK(Rational(3, 4) < Rational(4, 5));
}
