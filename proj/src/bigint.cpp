#include "schurq/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <limits>
#include <stdexcept>

namespace schurq {

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on INT64_MIN
    std::uint64_t m = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    while (m != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(m % kBase));
        m /= kBase;
    }
}

BigInt::BigInt(std::string_view s) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (std::size_t i = pos; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("BigInt: bad digit in numeral");
    // parse 9 decimal digits per limb, from the right
    std::size_t n = s.size();
    while (n > pos) {
        std::size_t chunk = std::min<std::size_t>(9, n - pos);
        std::uint32_t limb = 0;
        for (std::size_t i = n - chunk; i < n; ++i) limb = limb * 10 + (s[i] - '0');
        limbs_.push_back(limb);
        n -= chunk;
    }
    sign_ = sign;
    trim();
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<std::uint32_t>(s % kBase));
        carry = static_cast<std::uint32_t>(s / kBase);
    }
    if (carry) r.push_back(carry);
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<std::uint32_t>(s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Schoolbook long division with a base-10^9 digit estimate refined by comparison.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        q.assign(a.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = rem * kBase + a[i];
            q[i] = static_cast<std::uint32_t>(cur / b[0]);
            rem = cur % b[0];
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<std::uint32_t>(rem));
        return;
    }
    q.assign(a.size(), 0);
    std::vector<std::uint32_t> cur;  // running remainder, little-endian
    for (std::size_t i = a.size(); i-- > 0;) {
        cur.insert(cur.begin(), a[i]);
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
        if (cmp_mag(cur, b) < 0) continue;
        // estimate digit from the top two limbs of cur against the top limb of b
        std::uint64_t top = cur.back();
        if (cur.size() > b.size()) top = top * kBase + cur[cur.size() - 2];
        std::uint64_t lo = top / (static_cast<std::uint64_t>(b.back()) + 1);
        std::uint64_t hi = std::min<std::uint64_t>(kBase - 1, top / b.back() + 1);
        if (lo < 1) lo = 1;
        // binary search the exact digit
        while (lo < hi) {
            std::uint64_t mid = (lo + hi + 1) / 2;
            std::vector<std::uint32_t> t = mul_mag(b, {static_cast<std::uint32_t>(mid % kBase),
                                                       static_cast<std::uint32_t>(mid / kBase)});
            while (!t.empty() && t.back() == 0) t.pop_back();
            if (cmp_mag(t, cur) <= 0)
                lo = mid;
            else
                hi = mid - 1;
        }
        std::vector<std::uint32_t> t = mul_mag(b, {static_cast<std::uint32_t>(lo % kBase),
                                                   static_cast<std::uint32_t>(lo / kBase)});
        while (!t.empty() && t.back() == 0) t.pop_back();
        cur = sub_mag(cur, t);
        q[i] = static_cast<std::uint32_t>(lo);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r = cur;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
        r.sign_ = a.sign_;
    } else {
        int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.limbs_ = BigInt::sub_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            r.limbs_ = BigInt::sub_mag(b.limbs_, a.limbs_);
            r.sign_ = b.sign_;
        }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.limbs_ = BigInt::mul_mag(a.limbs_, b.limbs_);
    r.sign_ = a.sign_ * b.sign_;
    r.trim();
    return r;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    std::vector<std::uint32_t> q, rem;
    BigInt::divmod_mag(a.limbs_, b.limbs_, q, rem);
    BigInt r;
    r.limbs_ = std::move(q);
    r.sign_ = (a.sign_ * b.sign_ == 0 || r.limbs_.empty()) ? 0 : a.sign_ * b.sign_;
    r.trim();
    return r;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    std::vector<std::uint32_t> q, rem;
    BigInt::divmod_mag(a.limbs_, b.limbs_, q, rem);
    BigInt r;
    r.limbs_ = std::move(rem);
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    r.trim();
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = BigInt::cmp_mag(a.limbs_, b.limbs_) * (a.sign_ < 0 ? -1 : 1);
    return c <=> 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

BigInt BigInt::pow(const BigInt& base, unsigned exp) {
    BigInt r(1), b = base;
    while (exp) {
        if (exp & 1u) r = r * b;
        b = b * b;
        exp >>= 1u;
    }
    return r;
}

BigInt BigInt::binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    k = std::min(k, n - k);
    BigInt r(1);
    for (unsigned i = 1; i <= k; ++i) r = r * BigInt(static_cast<std::int64_t>(n - k + i)) / BigInt(i);
    return r;
}

BigInt BigInt::factorial(unsigned n) {
    BigInt r(1);
    for (unsigned i = 2; i <= n; ++i) r = r * BigInt(i);
    return r;
}

bool BigInt::fits_int64() const {
    static const BigInt lo(std::numeric_limits<std::int64_t>::min());
    static const BigInt hi(std::numeric_limits<std::int64_t>::max());
    return *this >= lo && *this <= hi;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: value does not fit in int64");
    std::int64_t r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) r = r * kBase + limbs_[i];
    return sign_ < 0 ? -r : r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

}  // namespace schurq
