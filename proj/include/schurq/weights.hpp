#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace schurq {

// Dominant weights for SL(4), SL(2) and the SL(4)xSL(2) pairs indexing the
// irreducible homogeneous bundles on Gr(2,6). All value types, all immutable
// in spirit: every derived weight is a fresh value.

struct Weight4 {
    std::array<int, 4> e{};

    int operator[](std::size_t i) const { return e[i]; }
    friend auto operator<=>(const Weight4&, const Weight4&) = default;

    bool dominant() const { return e[0] >= e[1] && e[1] >= e[2] && e[2] >= e[3]; }
    bool partition() const { return dominant() && e[3] >= 0; }
    int size() const { return e[0] + e[1] + e[2] + e[3]; }

    Weight4 shifted(int n) const { return {{e[0] + n, e[1] + n, e[2] + n, e[3] + n}}; }

    std::string to_string() const;
    static Weight4 parse(std::string_view text);  // "a,b,c,d"
};

struct Weight2 {
    std::array<int, 2> e{};

    int operator[](std::size_t i) const { return e[i]; }
    friend auto operator<=>(const Weight2&, const Weight2&) = default;

    bool dominant() const { return e[0] >= e[1]; }
    Weight2 shifted(int n) const { return {{e[0] + n, e[1] + n}}; }

    std::string to_string() const;
    static Weight2 parse(std::string_view text);  // "e,f"
};

// Index of an irreducible homogeneous bundle on Gr(2,6). Stored as written;
// the shift identification (all six entries +n give the same bundle) is
// applied only through canonical().
struct Weight6 {
    Weight4 q;
    Weight2 u;

    friend auto operator<=>(const Weight6&, const Weight6&) = default;

    bool dominant() const { return q.dominant() && u.dominant(); }

    // unique representative with u second entry 0
    Weight6 canonical() const {
        int n = u.e[1];
        return {q.shifted(-n), u.shifted(-n)};
    }
    Weight6 shifted(int n) const { return {q.shifted(n), u.shifted(n)}; }

    std::string to_string() const;                 // "a,b,c,d|e,f"
    static Weight6 parse(std::string_view text);
};

// true iff the sequence is non-increasing; length must be 2, 4 or 6
bool is_dominant(std::span<const int> w);

struct TwistedWeight4 {
    Weight4 weight;
    int twist = 0;
};

// Sigma_lambda(Q)^dual == Sigma_{lambda'}(Q) (x) O(-lambda_1),
// lambda' = (l1-l4, l1-l3, l1-l2, 0).
TwistedWeight4 dual_normalized(const Weight4& lambda);

// Sigma_lambda(Q) == Sigma_{lambda - l4}(Q) (x) O(l4); returned weight has last entry 0.
TwistedWeight4 reduce(const Weight4& lambda);

struct EndWeight {
    Weight4 left;   // dual-normalized partner
    Weight4 right;  // lambda itself
    int twist = 0;  // -lambda_1
};

// End(Sigma_lambda(Q)) == Sigma_{lambda'}(Q) (x) Sigma_lambda(Q) (x) O(-lambda_1)
EndWeight end_weight(const Weight4& lambda);

}  // namespace schurq
