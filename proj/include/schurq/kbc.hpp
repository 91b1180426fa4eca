#pragma once

#include <vector>

#include "schurq/bigint.hpp"
#include "schurq/weights.hpp"

namespace schurq {

// lambda = a d1 + b d2 + c d3 = (a+b+c, b+c, c, 0)
Weight4 lambda_from_abc(int a, int b, int c);

// Total multiplicity of the new-summand set at lambda(a,b,c).
BigInt k_cardinality(int b, int c, int a);

struct KbcRecord {
    int b = 0, c = 0;
    std::vector<std::pair<int, BigInt>> a_values;  // (a, cardinality with multiplicity)
    bool stabilized = false;
    BigInt k;        // stabilized value, when stabilized
    BigInt f_value;  // interpolating polynomial at (b,c)
};

// Cardinalities for a = 0..a_max and the verdict that they are constant from
// a = b+c-1 on.
KbcRecord verify_stabilization(int b, int c, int a_max);

// Degree-5 interpolating polynomial, evaluated with b and c swapped so that
// b >= c; exact integer by construction (non-integrality would mean a
// transcription error).
BigInt f_poly(int b, int c);

}  // namespace schurq
