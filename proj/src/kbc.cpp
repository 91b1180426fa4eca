#include "schurq/kbc.hpp"

#include <stdexcept>

#include "schurq/koszul.hpp"
#include "schurq/rational.hpp"

namespace schurq {

Weight4 lambda_from_abc(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("lambda_from_abc: negative coefficient");
    return {{a + b + c, b + c, c, 0}};
}

BigInt k_cardinality(int b, int c, int a) {
    return total_multiplicity(k_set(lambda_from_abc(a, b, c)));
}

KbcRecord verify_stabilization(int b, int c, int a_max) {
    KbcRecord rec;
    rec.b = b;
    rec.c = c;
    rec.f_value = f_poly(b, c);
    for (int a = 0; a <= a_max; ++a) rec.a_values.emplace_back(a, k_cardinality(b, c, a));

    int threshold = std::max(b + c - 1, 0);
    rec.stabilized = a_max >= threshold;
    for (int a = threshold; a <= a_max && rec.stabilized; ++a)
        if (rec.a_values[a].second != rec.a_values[threshold].second) rec.stabilized = false;
    if (rec.stabilized) rec.k = rec.a_values[threshold].second;
    return rec;
}

BigInt f_poly(int b, int c) {
    if (b < 0 || c < 0) throw std::invalid_argument("f_poly: negative argument");
    if (b < c) std::swap(b, c);
    Rational B(b), C(c);
    Rational c2 = C * C, c3 = c2 * C, c4 = c3 * C, c5 = c4 * C;
    Rational value =
        (Rational(60) + Rational(134) * C + Rational(90) * c2 + Rational(15) * c3 + c5) / Rational(60)
        + (Rational(26) + Rational(62) * C + Rational(45) * c2 + Rational(8) * c3 - c4) / Rational(12) * B
        + (Rational(3) + Rational(7) * C + Rational(5) * c2 + c3) / Rational(2) * B * B
        + (C + 1) * (C + 1) / Rational(3) * B * B * B;
    return value.to_integer();
}

}  // namespace schurq
