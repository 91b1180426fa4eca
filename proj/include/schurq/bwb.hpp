#pragma once

#include <array>
#include <optional>
#include <string>

#include "schurq/bigint.hpp"
#include "schurq/weights.hpp"

namespace schurq {

// Outcome of the Borel-Weil-Bott algorithm on Gr(2,6): either acyclic, or a
// single cohomology group in one degree, carrying the SL(6) highest weight
// normalized to last entry 0 and its dimension.
struct BwbResult {
    bool acyclic = true;
    int degree = -1;                  // 0..8 when not acyclic
    std::array<int, 6> weight{};      // normalized, last entry 0
    BigInt dim;

    std::string weight_string() const;
};

// Add the staircase (5,4,3,2,1,0) to (q|u); repeated entries mean acyclic;
// otherwise the degree is the inversion count and the weight is the descending
// sort minus the staircase, shifted so its last entry is 0.
BwbResult bwb(const Weight6& w);

// number of pairs out of descending order
int inversion_count(const std::array<int, 6>& v);

}  // namespace schurq
