#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "schurq/bwb.hpp"
#include "schurq/schur.hpp"
#include "schurq/weights.hpp"

namespace schurq {

// Irreducible u-factors of wedge^p Sym^3(U~), p = 0..4.
std::vector<Weight2> koszul_factors(int p);

// One nonzero cohomology group on the first page: the End-summand `input`
// (u-part (l1,l1)) tensored with a Koszul factor at position p has H^q equal
// to the SL(6)-module `weight` of dimension `dim`; `mult` is the summand's
// multiplicity in End.
struct E1Entry {
    Weight6 input;
    int p = 0;
    int q = 0;
    std::array<int, 6> weight{};
    BigInt dim;
    BigInt mult;

    std::string weight_string() const;
};

struct E1Page {
    Weight4 lambda;
    std::vector<E1Entry> entries;  // sorted: by input, then p, then q, then weight

    // sum of (-1)^(q-p) dim * mult, which must equal chi_end(lambda)
    BigInt euler_sum() const;
};

E1Page e1_page(const Weight4& lambda);

// Total degree n is "forced" when, inside every End-summand's own grid, each
// nonzero entry with q - p = n has all its potential differential sources
// (p+r, q+r-1) and targets (p-r, q-r+1), r = 1..4, empty on the first page.
// Forced n means ext^n equals the antidiagonal sum.
std::array<bool, 5> degeneration_flags(const E1Page& page);

enum class ExtProvenance { Degeneration, SerreDuality, EulerCharacteristic, KnownResolution };

std::string to_string(ExtProvenance p);

struct ExtValue {
    bool exact = false;
    BigInt value;          // when exact
    BigInt lower, upper;   // otherwise
    ExtProvenance provenance = ExtProvenance::Degeneration;
};

struct ExtReport {
    Weight4 lambda;
    std::array<ExtValue, 5> ext;
    BigInt chi;

    bool all_exact() const;
};

ExtReport ext_report(const Weight4& lambda);

// New summands when passing from End(Sigma_lambda) to End(Sigma_{lambda+d1}),
// d1 = (1,0,0,0): the multiset difference
//   end_decomposition(lambda + d1)  minus  end_decomposition(lambda) + 1.
// Throws on a containment violation (which would signal a bug upstream).
IrrepSum<Weight6> k_set(const Weight4& lambda);

// Hand-resolved Ext^1 values that the spectral sequence alone does not force;
// keyed by the reduced partition up to the dual reflection
// (m,t,s,0) -> (m, m-s, m-t, 0).
std::optional<BigInt> known_resolution_ext1(const Weight4& lambda);

}  // namespace schurq
