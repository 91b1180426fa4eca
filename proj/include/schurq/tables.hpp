#pragma once

#include <functional>
#include <vector>

#include "schurq/bigint.hpp"
#include "schurq/rational.hpp"
#include "schurq/schur.hpp"
#include "schurq/weights.hpp"

namespace schurq {
namespace tables {

// One row of the self-Ext first-page tables: the End summand (as printed),
// Koszul position, cohomology degree, SL(6) weight, dimension, multiplicity.
struct PageRow {
    Weight6 mu;
    int koszul;
    int degree;
    std::array<int, 6> weight;
    std::int64_t dim;
    std::int64_t mult;
};

// the 9-row table for (2,1,0,0)
const std::vector<PageRow>& page_table_2100();

// the 35-row table for (3,2,1,0)
const std::vector<PageRow>& page_table_3210();

// A self-Ext dimension row: ext^1 and ext^2 for a listed partition.
struct ExtRow {
    Weight4 lambda;
    BigInt ext1;
    BigInt ext2;
};

// The tabulated families ((m,0,0,0), (m,1,0,0), (m,1,1,0), (m,2,0,0),
// (m,2,2,0) for m up to m_max) together with the fixed rows.
std::vector<ExtRow> ext_dimension_rows(int m_max);

// Parametric generator lists: the new End summands at each step m -> m+1 of
// the family (m,t,s,0). Entries are affine in m; an entry is present when
// m >= min_m and the evaluated tuple is a partition. Multiplicity is a step
// function of m.
struct KEntry {
    std::array<std::pair<int, int>, 4> coef;       // entry_i = first*m + second
    int min_m = 0;
    std::vector<std::pair<int, int>> mult_steps;   // (m_from, mult), ascending
};

struct KFamily {
    int t = 0, s = 0;                              // family (m, t, s, 0), m >= t
    std::vector<KEntry> entries;
    std::function<Rational(int)> rank_sum;         // r^2(m) - r^2(m-1), closed form
};

const std::vector<KFamily>& k_families();

// the family's lambda at a given m
Weight4 k_family_lambda(const KFamily& fam, int m);

// evaluated golden list at m (canonical keys, u-part (m,m))
IrrepSum<Weight6> k_family_expected(const KFamily& fam, int m);

// the ten tabulated stabilized cardinalities k_{b,c}
struct KbcRow {
    int b, c;
    std::int64_t k;
};
const std::vector<KbcRow>& kbc_table();

}  // namespace tables
}  // namespace schurq
