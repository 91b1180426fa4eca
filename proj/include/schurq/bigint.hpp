#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace schurq {

// Signed arbitrary-precision integer, sign + magnitude in base 10^9 limbs.
// Magnitudes are normalized (no leading zero limbs); zero has sign 0.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);
    explicit BigInt(std::string_view decimal);

    static BigInt from_string(std::string_view decimal) { return BigInt(decimal); }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int signum() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    // Truncated division (C semantics: quotient rounds toward zero).
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }
    BigInt& operator/=(const BigInt& o) { *this = *this / o; return *this; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow(const BigInt& base, unsigned exp);
    static BigInt binomial(unsigned n, unsigned k);
    static BigInt factorial(unsigned n);

    bool fits_int64() const;
    std::int64_t to_int64() const;  // throws std::overflow_error if it does not fit

    std::string to_string() const;

private:
    static constexpr std::uint32_t kBase = 1000000000u;

    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;  // little-endian, base 10^9

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

}  // namespace schurq
