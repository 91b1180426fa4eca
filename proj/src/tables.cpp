#include "schurq/tables.hpp"

#include "schurq/chern.hpp"

namespace schurq {
namespace tables {

namespace {

Weight6 w6(int a, int b, int c, int d, int e, int f) {
    return {Weight4{{a, b, c, d}}, Weight2{{e, f}}};
}

}  // namespace

const std::vector<PageRow>& page_table_2100() {
    static const std::vector<PageRow> rows = {
        {w6(4, 3, 1, 0, 2, 2), 2, 4, {2, 1, 1, 1, 1, 0}, 35, 1},
        {w6(4, 3, 1, 0, 2, 2), 2, 4, {2, 2, 2, 0, 0, 0}, 175, 1},
        {w6(4, 2, 2, 0, 2, 2), 2, 4, {2, 2, 1, 1, 0, 0}, 189, 1},
        {w6(3, 3, 1, 1, 2, 2), 1, 2, {1, 1, 1, 0, 0, 0}, 20, 1},
        {w6(3, 3, 1, 1, 2, 2), 2, 4, {0, 0, 0, 0, 0, 0}, 1, 1},
        {w6(3, 3, 1, 1, 2, 2), 3, 6, {1, 1, 1, 0, 0, 0}, 20, 1},
        {w6(0, 0, 0, 0, 0, 0), 0, 0, {0, 0, 0, 0, 0, 0}, 1, 1},
        {w6(0, 0, 0, 0, 0, 0), 2, 4, {0, 0, 0, 0, 0, 0}, 1, 1},
        {w6(0, 0, 0, 0, 0, 0), 4, 8, {0, 0, 0, 0, 0, 0}, 1, 1},
    };
    return rows;
}

const std::vector<PageRow>& page_table_3210() {
    static const std::vector<PageRow> rows = {
        {w6(6, 4, 2, 0, 3, 3), 2, 4, {4, 3, 3, 1, 1, 0}, 3969, 1},
        {w6(6, 4, 2, 0, 3, 3), 2, 4, {4, 2, 2, 2, 2, 0}, 405, 1},
        {w6(6, 4, 2, 0, 3, 3), 4, 6, {4, 4, 4, 4, 2, 0}, 1134, 1},
        {w6(6, 4, 2, 0, 3, 3), 3, 5, {4, 4, 3, 2, 2, 0}, 3240, 1},
        {w6(6, 4, 2, 0, 3, 3), 1, 3, {4, 2, 2, 1, 0, 0}, 3240, 1},
        {w6(6, 4, 2, 0, 3, 3), 0, 2, {4, 2, 0, 0, 0, 0}, 1134, 1},
        {w6(6, 4, 1, 1, 3, 3), 4, 6, {3, 3, 3, 3, 0, 0}, 490, 1},
        {w6(6, 4, 1, 1, 3, 3), 3, 5, {3, 3, 2, 1, 0, 0}, 1960, 1},
        {w6(6, 4, 1, 1, 3, 3), 2, 4, {3, 1, 1, 1, 0, 0}, 280, 1},
        {w6(6, 3, 3, 0, 3, 3), 4, 6, {4, 4, 4, 3, 3, 0}, 840, 1},
        {w6(6, 3, 3, 0, 3, 3), 2, 4, {4, 3, 2, 2, 1, 0}, 3675, 1},
        {w6(6, 3, 3, 0, 3, 3), 0, 2, {4, 1, 1, 0, 0, 0}, 840, 1},
        {w6(6, 3, 2, 1, 3, 3), 4, 6, {3, 3, 3, 2, 1, 0}, 896, 2},
        {w6(6, 3, 2, 1, 3, 3), 3, 5, {3, 3, 1, 1, 1, 0}, 560, 2},
        {w6(6, 3, 2, 1, 3, 3), 2, 4, {3, 2, 1, 0, 0, 0}, 896, 2},
        {w6(6, 2, 2, 2, 3, 3), 4, 6, {2, 2, 2, 0, 0, 0}, 175, 1},
        {w6(6, 2, 2, 2, 3, 3), 1, 3, {3, 0, 0, 0, 0, 0}, 56, 1},
        {w6(5, 5, 2, 0, 3, 3), 2, 4, {3, 3, 2, 2, 2, 0}, 280, 1},
        {w6(5, 5, 2, 0, 3, 3), 1, 3, {3, 3, 2, 1, 0, 0}, 1960, 1},
        {w6(5, 5, 2, 0, 3, 3), 0, 2, {3, 3, 0, 0, 0, 0}, 490, 1},
        {w6(5, 5, 1, 1, 3, 3), 2, 4, {2, 2, 1, 1, 0, 0}, 189, 1},
        {w6(5, 4, 3, 0, 3, 3), 2, 4, {3, 3, 3, 2, 1, 0}, 896, 2},
        {w6(5, 4, 3, 0, 3, 3), 1, 3, {3, 2, 2, 2, 0, 0}, 560, 2},
        {w6(5, 4, 3, 0, 3, 3), 0, 2, {3, 2, 1, 0, 0, 0}, 896, 2},
        {w6(5, 4, 2, 1, 3, 3), 2, 4, {2, 2, 2, 0, 0, 0}, 175, 4},
        {w6(5, 4, 2, 1, 3, 3), 2, 4, {2, 1, 1, 1, 1, 0}, 35, 4},
        {w6(5, 3, 3, 1, 3, 3), 2, 4, {2, 2, 1, 1, 0, 0}, 189, 3},
        {w6(4, 4, 4, 0, 3, 3), 3, 5, {3, 3, 3, 3, 3, 0}, 56, 1},
        {w6(4, 4, 4, 0, 3, 3), 0, 2, {2, 2, 2, 0, 0, 0}, 175, 1},
        {w6(4, 4, 2, 2, 3, 3), 3, 6, {1, 1, 1, 0, 0, 0}, 20, 2},
        {w6(4, 4, 2, 2, 3, 3), 2, 4, {0, 0, 0, 0, 0, 0}, 1, 2},
        {w6(4, 4, 2, 2, 3, 3), 1, 2, {1, 1, 1, 0, 0, 0}, 20, 2},
        {w6(3, 3, 3, 3, 3, 3), 0, 0, {0, 0, 0, 0, 0, 0}, 1, 1},
        {w6(3, 3, 3, 3, 3, 3), 2, 4, {0, 0, 0, 0, 0, 0}, 1, 1},
        {w6(3, 3, 3, 3, 3, 3), 4, 8, {0, 0, 0, 0, 0, 0}, 1, 1},
    };
    return rows;
}

namespace {

BigInt rank_of(const Weight4& lambda) { return weyl_dim_sl4(lambda); }

// ext2 = 3 * quartic(m)/1200 * r^2 + 38 for the twenty-moduli families
BigInt family_ext2(const Weight4& lambda, std::int64_t c4, std::int64_t c3, std::int64_t c2,
                   std::int64_t c1, std::int64_t c0) {
    std::int64_t m = lambda[0];
    Rational q = Rational(c4) * Rational(m * m * m * m) + Rational(c3) * Rational(m * m * m)
               + Rational(c2) * Rational(m * m) + Rational(c1) * Rational(m) + Rational(c0);
    Rational r(rank_of(lambda));
    return (Rational(3) * q / Rational(1200) * r * r + Rational(38)).to_integer();
}

}  // namespace

std::vector<ExtRow> ext_dimension_rows(int m_max) {
    std::vector<ExtRow> rows;
    for (int m = 1; m <= m_max; ++m) {
        // (m,0,0,0): rigid, ext2 = 3((3m^2+12m-20)/20)^2 r^2 - 2
        Weight4 sym{{m, 0, 0, 0}};
        Rational q(3 * static_cast<std::int64_t>(m) * m + 12 * m - 20, 20);
        Rational r(rank_of(sym));
        rows.push_back({sym, BigInt(0), (Rational(3) * q * q * r * r - Rational(2)).to_integer()});
    }
    for (int m = 1; m <= m_max; ++m) {
        Weight4 l{{m, 1, 0, 0}};
        rows.push_back({l, BigInt(20), family_ext2(l, 27, 180, 26, -980, 347)});
    }
    // (1,1,1,0) and (2,2,2,0) are twisted duals of Q and Sym^2 Q, hence rigid;
    // the twenty-moduli rows of these two families start one step later
    for (int m = 2; m <= m_max; ++m) {
        Weight4 l{{m, 1, 1, 0}};
        rows.push_back({l, BigInt(20), family_ext2(l, 27, 144, -136, -808, 848)});
    }
    for (int m = 2; m <= m_max; ++m) {
        Weight4 l{{m, 2, 0, 0}};
        rows.push_back({l, BigInt(20), family_ext2(l, 27, 144, 92, -500, -400)});
    }
    for (int m = 3; m <= m_max; ++m) {
        Weight4 l{{m, 2, 2, 0}};
        rows.push_back({l, BigInt(20), family_ext2(l, 27, 72, -124, 4, 248)});
    }
    const std::vector<std::tuple<Weight4, std::int64_t, std::int64_t>> fixed = {
        {Weight4{{2, 2, 1, 0}}, 20, 401},
        {Weight4{{3, 2, 1, 0}}, 40, 35406},
        {Weight4{{4, 2, 1, 0}}, 40, 554121},
        {Weight4{{3, 3, 0, 0}}, 20, 45338},
        {Weight4{{4, 3, 0, 0}}, 20, 864545},
        {Weight4{{5, 3, 0, 0}}, 20, 7136006},
        {Weight4{{3, 3, 1, 0}}, 20, 45065},
        {Weight4{{4, 3, 1, 0}}, 40, 996003},
        {Weight4{{3, 3, 2, 0}}, 20, 23771},
        {Weight4{{4, 3, 2, 0}}, 40, 554121},
    };
    for (const auto& [l, e1, e2] : fixed) rows.push_back({l, BigInt(e1), BigInt(e2)});
    return rows;
}

// ---------------------------------------------------------------------------
// parametric generator lists
// ---------------------------------------------------------------------------

namespace {

using C = std::pair<int, int>;  // a*m + b

KEntry entry(C e0, C e1, C e2, C e3, int min_m = 0,
             std::vector<std::pair<int, int>> mult_steps = {{0, 1}}) {
    return {{e0, e1, e2, e3}, min_m, std::move(mult_steps)};
}

}  // namespace

const std::vector<KFamily>& k_families() {
    static const std::vector<KFamily> families = [] {
        std::vector<KFamily> fams;

        // (m,0,0,0)
        fams.push_back({0, 0,
            {entry({2, 0}, {1, 0}, {1, 0}, {0, 0})},
            [](int m) {
                Rational rm(BigInt::binomial(m + 3, 3));
                Rational rp = m == 0 ? Rational(0) : Rational(BigInt::binomial(m + 2, 3));
                return rm * rm - rp * rp;
            }});

        // (m,1,0,0)
        fams.push_back({1, 0,
            {
                entry({2, 0}, {1, 0}, {1, 0}, {0, 0}),
                entry({2, 0}, {1, 1}, {1, -1}, {0, 0}),
                entry({2, 0}, {1, 0}, {1, -1}, {0, 1}),
                entry({2, -1}, {1, 1}, {1, 0}, {0, 0}),
                entry({2, -1}, {1, 0}, {1, 0}, {0, 1}),
            },
            [](int m) {
                Rational M(m);
                return (M + 2) * (M + 2) * (Rational(6) * M * M * M + Rational(11) * M * M - 1)
                       / Rational(4);
            }});

        // (m,1,1,0)
        fams.push_back({1, 1,
            {
                entry({2, 0}, {1, 0}, {1, 0}, {0, 0}),
                entry({2, 0}, {1, 0}, {1, -1}, {0, 1}),
                entry({2, -1}, {1, 1}, {1, 0}, {0, 0}),
                entry({2, -1}, {1, 0}, {1, 0}, {0, 1}),
                entry({2, -1}, {1, 1}, {1, -1}, {0, 1}),
            },
            [](int m) {
                Rational M(m);
                return M * M * (Rational(3) * M + 5) * (Rational(2) * M * M + Rational(5) * M + 1)
                       / Rational(4);
            }});

        // (m,2,0,0)
        fams.push_back({2, 0,
            {
                entry({2, 0}, {1, 0}, {1, 0}, {0, 0}),
                entry({2, 0}, {1, 1}, {1, -1}, {0, 0}),
                entry({2, 0}, {1, 2}, {1, -2}, {0, 0}),
                entry({2, 0}, {1, 0}, {1, -1}, {0, 1}, 3),
                entry({2, 0}, {1, 1}, {1, -2}, {0, 1}, 3),
                entry({2, 0}, {1, 0}, {1, -2}, {0, 2}, 4),
                entry({2, -1}, {1, 1}, {1, 0}, {0, 0}, 3),
                entry({2, -1}, {1, 2}, {1, -1}, {0, 0}, 3),
                entry({2, -1}, {1, 0}, {1, 0}, {0, 1}),
                entry({2, -1}, {1, 1}, {1, -1}, {0, 1}),
                entry({2, -1}, {1, 0}, {1, -1}, {0, 2}, 3),
                entry({2, -2}, {1, 2}, {1, 0}, {0, 0}, 4),
                entry({2, -2}, {1, 1}, {1, 0}, {0, 1}, 3),
                entry({2, -2}, {1, 0}, {1, 0}, {0, 2}, 2),
            },
            [](int m) {
                Rational M(m);
                return (M + 2) * (M + 2)
                       * (Rational(6) * M * M * M + M * M - Rational(16) * M + 5);
            }});

        // (m,2,1,0); multiplicity case splits at m=2 forced by the base case
        fams.push_back({2, 1,
            {
                entry({2, 0}, {1, 1}, {1, -1}, {0, 0}),
                entry({2, 0}, {1, 1}, {1, -2}, {0, 1}),
                entry({2, 0}, {1, 0}, {1, 0}, {0, 0}),
                entry({2, 0}, {1, 0}, {1, -1}, {0, 1}, 0, {{2, 1}, {3, 2}}),
                entry({2, 0}, {1, 0}, {1, -2}, {0, 2}, 4),
                entry({2, 0}, {1, -1}, {1, -1}, {0, 2}),
                entry({2, -1}, {1, 2}, {1, -1}, {0, 0}),
                entry({2, -1}, {1, 2}, {1, -2}, {0, 1}),
                entry({2, -1}, {1, 1}, {1, 0}, {0, 0}, 0, {{2, 1}, {3, 2}}),
                entry({2, -1}, {1, 1}, {1, -1}, {0, 1}, 0, {{2, 1}, {3, 3}}),
                entry({2, -1}, {1, 1}, {1, -2}, {0, 2}),
                entry({2, -1}, {1, 0}, {1, 0}, {0, 1}, 0, {{0, 2}}),
                entry({2, -1}, {1, 0}, {1, -1}, {0, 2}, 0, {{0, 2}}),
                entry({2, -2}, {1, 2}, {1, 0}, {0, 0}),
                entry({2, -2}, {1, 2}, {1, -1}, {0, 1}),
                entry({2, -2}, {1, 1}, {1, 1}, {0, 0}),
                entry({2, -2}, {1, 1}, {1, 0}, {0, 1}, 0, {{0, 2}}),
                entry({2, -2}, {1, 1}, {1, -1}, {0, 2}),
                entry({2, -2}, {1, 0}, {1, 0}, {0, 2}),
            },
            [](int m) {
                Rational M(m);
                return Rational(16, 3) * (Rational(2) * M + 1) * (M * M + M - 3)
                       * (M * M + M - 1);
            }});

        // (m,2,2,0); the two m>=3 conditions are forced by the base case
        fams.push_back({2, 2,
            {
                entry({2, 0}, {1, 0}, {1, 0}, {0, 0}),
                entry({2, 0}, {1, 0}, {1, -1}, {0, 1}, 3),
                entry({2, 0}, {1, 0}, {1, -2}, {0, 2}),
                entry({2, -1}, {1, 1}, {1, 0}, {0, 0}, 3),
                entry({2, -1}, {1, 1}, {1, -1}, {0, 1}, 3),
                entry({2, -1}, {1, 1}, {1, -2}, {0, 2}),
                entry({2, -1}, {1, 0}, {1, 0}, {0, 1}),
                entry({2, -1}, {1, 0}, {1, -1}, {0, 2}),
                entry({2, -2}, {1, 2}, {1, 0}, {0, 0}),
                entry({2, -2}, {1, 2}, {1, -1}, {0, 1}),
                entry({2, -2}, {1, 2}, {1, -2}, {0, 2}),
                entry({2, -2}, {1, 1}, {1, 0}, {0, 1}),
                entry({2, -2}, {1, 1}, {1, -1}, {0, 2}),
                entry({2, -2}, {1, 0}, {1, 0}, {0, 2}),
            },
            [](int m) {
                Rational M(m);
                return (M - 1) * (M - 1)
                       * (Rational(6) * M * M * M + Rational(17) * M * M - 16);
            }});

        // (m,3,0,0); the i=2 entry of the (2m-1, m+i, m-i, 1) block is missing
        // from the printed list (forced by the base case and k_{3,0} = 30)
        fams.push_back({3, 0,
            {
                entry({2, 0}, {1, 0}, {1, 0}, {0, 0}),
                entry({2, 0}, {1, 1}, {1, -1}, {0, 0}),
                entry({2, 0}, {1, 2}, {1, -2}, {0, 0}),
                entry({2, 0}, {1, 3}, {1, -3}, {0, 0}),
                entry({2, 0}, {1, 0}, {1, -1}, {0, 1}, 4),
                entry({2, 0}, {1, 1}, {1, -2}, {0, 1}, 4),
                entry({2, 0}, {1, 2}, {1, -3}, {0, 1}, 4),
                entry({2, 0}, {1, 0}, {1, -2}, {0, 2}, 5),
                entry({2, 0}, {1, 1}, {1, -3}, {0, 2}, 5),
                entry({2, 0}, {1, 0}, {1, -3}, {0, 3}, 6),
                entry({2, -1}, {1, 1}, {1, 0}, {0, 0}, 4),
                entry({2, -1}, {1, 2}, {1, -1}, {0, 0}, 4),
                entry({2, -1}, {1, 3}, {1, -2}, {0, 0}, 4),
                entry({2, -1}, {1, 0}, {1, 0}, {0, 1}),
                entry({2, -1}, {1, 1}, {1, -1}, {0, 1}),
                entry({2, -1}, {1, 2}, {1, -2}, {0, 1}),
                entry({2, -1}, {1, 0}, {1, -1}, {0, 2}, 4),
                entry({2, -1}, {1, 1}, {1, -2}, {0, 2}, 4),
                entry({2, -1}, {1, 0}, {1, -2}, {0, 3}, 5),
                entry({2, -2}, {1, 0}, {1, 0}, {0, 2}),
                entry({2, -2}, {1, 1}, {1, 0}, {0, 1}, 4),
                entry({2, -2}, {1, 2}, {1, 0}, {0, 0}, 5),
                entry({2, -2}, {1, 0}, {1, -1}, {0, 3}, 4),
                entry({2, -2}, {1, 1}, {1, -1}, {0, 2}),
                entry({2, -2}, {1, 2}, {1, -1}, {0, 1}, 4),
                entry({2, -2}, {1, 3}, {1, -1}, {0, 0}, 5),
                entry({2, -3}, {1, 0}, {1, 0}, {0, 3}),
                entry({2, -3}, {1, 1}, {1, 0}, {0, 2}, 4),
                entry({2, -3}, {1, 2}, {1, 0}, {0, 1}, 5),
                entry({2, -3}, {1, 3}, {1, 0}, {0, 0}, 6),
            },
            [](int m) {
                Rational M(m);
                return Rational(25, 3) * (M - 1) * (M + 2) * (M + 2)
                       * (Rational(2) * M * M - M - 9);
            }});

        // (m,3,1,0)
        fams.push_back({3, 1,
            {
                entry({2, 0}, {1, 0}, {1, 0}, {0, 0}),
                entry({2, 0}, {1, 1}, {1, -1}, {0, 0}),
                entry({2, 0}, {1, 2}, {1, -2}, {0, 0}),
                entry({2, 0}, {1, 0}, {1, -1}, {0, 1}, 3, {{3, 1}, {4, 2}}),
                entry({2, 0}, {1, 1}, {1, -2}, {0, 1}, 3, {{3, 1}, {4, 2}}),
                entry({2, 0}, {1, 2}, {1, -3}, {0, 1}, 4),
                entry({2, 0}, {1, -1}, {1, -1}, {0, 2}, 4),
                entry({2, 0}, {1, 0}, {1, -2}, {0, 2}, 4, {{4, 1}, {5, 2}}),
                entry({2, 0}, {1, 1}, {1, -3}, {0, 2}, 5),
                entry({2, 0}, {1, -1}, {1, -2}, {0, 3}, 5),
                entry({2, 0}, {1, 0}, {1, -3}, {0, 3}, 6),
                entry({2, -1}, {1, 3}, {1, -2}, {0, 0}, 4),
                entry({2, -1}, {1, 2}, {1, -1}, {0, 0}, 3, {{3, 1}, {4, 2}}),
                entry({2, -1}, {1, 1}, {1, 0}, {0, 0}, 3, {{3, 1}, {4, 2}}),
                entry({2, -1}, {1, 3}, {1, -3}, {0, 1}, 4),
                entry({2, -1}, {1, 2}, {1, -2}, {0, 1}, 3, {{3, 1}, {4, 3}}),
                entry({2, -1}, {1, 1}, {1, -1}, {0, 1}, 3, {{3, 2}, {4, 4}}),
                entry({2, -1}, {1, 0}, {1, 0}, {0, 1}, 0, {{0, 2}}),
                entry({2, -1}, {1, 0}, {1, -1}, {0, 2}, 3, {{3, 1}, {4, 3}}),
                entry({2, -1}, {1, 1}, {1, -2}, {0, 2}, 4, {{4, 2}, {5, 3}}),
                entry({2, -1}, {1, -1}, {1, -1}, {0, 3}, 4),
                entry({2, -1}, {1, 2}, {1, -3}, {0, 2}, 5),
                entry({2, -1}, {1, 0}, {1, -2}, {0, 3}, 5, {{0, 2}}),
                entry({2, -1}, {1, 1}, {1, -3}, {0, 3}, 6),
                entry({2, -2}, {1, 1}, {1, 0}, {0, 1}, 3, {{3, 1}, {4, 3}}),
                entry({2, -2}, {1, 1}, {1, -1}, {0, 2}, 3, {{3, 1}, {4, 3}}),
                entry({2, -2}, {1, 0}, {1, 0}, {0, 2}, 0, {{0, 2}}),
                entry({2, -2}, {1, 2}, {1, 0}, {0, 0}, 4, {{4, 1}, {5, 2}}),
                entry({2, -2}, {1, 2}, {1, -1}, {0, 1}, 4, {{4, 2}, {5, 3}}),
                entry({2, -2}, {1, 2}, {1, -2}, {0, 2}, 4),
                entry({2, -2}, {1, 1}, {1, 1}, {0, 0}, 4),
                entry({2, -2}, {1, 0}, {1, -1}, {0, 3}, 4, {{0, 2}}),
                entry({2, -2}, {1, 3}, {1, -1}, {0, 0}, 5),
                entry({2, -2}, {1, 3}, {1, -2}, {0, 1}, 5),
                entry({2, -2}, {1, 1}, {1, -2}, {0, 3}, 5),
                entry({2, -3}, {1, 0}, {1, 0}, {0, 3}),
                entry({2, -3}, {1, 1}, {1, 1}, {0, 1}, 4),
                entry({2, -3}, {1, 1}, {1, 0}, {0, 2}, 4, {{0, 2}}),
                entry({2, -3}, {1, 1}, {1, -1}, {0, 3}, 4),
                entry({2, -3}, {1, 2}, {1, 1}, {0, 0}, 5),
                entry({2, -3}, {1, 2}, {1, 0}, {0, 1}, 5, {{0, 2}}),
                entry({2, -3}, {1, 2}, {1, -1}, {0, 2}, 5),
                entry({2, -3}, {1, 3}, {1, 0}, {0, 0}, 6),
                entry({2, -3}, {1, 3}, {1, -1}, {0, 1}, 6),
            },
            [](int m) {
                Rational M(m);
                return Rational(25, 4) * (Rational(3) * M * M + M - 6)
                       * (Rational(2) * M * M * M + M * M - Rational(11) * M - 6);
            }});

        // (m,3,2,0)
        fams.push_back({3, 2,
            {
                entry({2, 0}, {1, 1}, {1, -1}, {0, 0}),
                entry({2, 0}, {1, 0}, {1, 0}, {0, 0}),
                entry({2, 0}, {1, 0}, {1, -1}, {0, 1}, 3, {{3, 1}, {4, 2}}),
                entry({2, 0}, {1, 1}, {1, -2}, {0, 1}, 4),
                entry({2, 0}, {1, 0}, {1, -2}, {0, 2}, 4, {{4, 1}, {5, 2}}),
                entry({2, 0}, {1, -1}, {1, -1}, {0, 2}, 4),
                entry({2, 0}, {1, 1}, {1, -3}, {0, 2}, 5),
                entry({2, 0}, {1, -1}, {1, -2}, {0, 3}, 5),
                entry({2, 0}, {1, 0}, {1, -3}, {0, 3}, 6),
                entry({2, -1}, {1, 1}, {1, 0}, {0, 0}, 3, {{3, 1}, {4, 2}}),
                entry({2, -1}, {1, 1}, {1, -1}, {0, 1}, 3, {{3, 1}, {4, 3}}),
                entry({2, -1}, {1, 0}, {1, 0}, {0, 1}, 0, {{0, 2}}),
                entry({2, -1}, {1, 0}, {1, -1}, {0, 2}, 3, {{3, 1}, {4, 3}}),
                entry({2, -1}, {1, 2}, {1, -1}, {0, 0}, 4),
                entry({2, -1}, {1, 2}, {1, -2}, {0, 1}, 4),
                entry({2, -1}, {1, 1}, {1, -2}, {0, 2}, 4, {{4, 2}, {5, 3}}),
                entry({2, -1}, {1, -1}, {1, -1}, {0, 3}, 4),
                entry({2, -1}, {1, 2}, {1, -3}, {0, 2}, 5),
                entry({2, -1}, {1, 0}, {1, -2}, {0, 3}, 5, {{0, 2}}),
                entry({2, -1}, {1, 1}, {1, -3}, {0, 3}, 6),
                entry({2, -2}, {1, 1}, {1, 0}, {0, 1}, 3, {{3, 1}, {4, 3}}),
                entry({2, -2}, {1, 1}, {1, -1}, {0, 2}, 3, {{3, 1}, {4, 4}}),
                entry({2, -2}, {1, 0}, {1, 0}, {0, 2}, 0, {{0, 2}}),
                entry({2, -2}, {1, 2}, {1, 0}, {0, 0}, 4, {{4, 1}, {5, 2}}),
                entry({2, -2}, {1, 2}, {1, -1}, {0, 1}, 4, {{4, 2}, {5, 3}}),
                entry({2, -2}, {1, 2}, {1, -2}, {0, 2}, 4, {{4, 1}, {5, 3}}),
                entry({2, -2}, {1, 1}, {1, 1}, {0, 0}, 4),
                entry({2, -2}, {1, 0}, {1, -1}, {0, 3}, 0, {{0, 2}}),
                entry({2, -2}, {1, 3}, {1, -1}, {0, 0}, 5),
                entry({2, -2}, {1, 3}, {1, -2}, {0, 1}, 5),
                entry({2, -2}, {1, 3}, {1, -3}, {0, 2}, 5),
                entry({2, -2}, {1, 1}, {1, -2}, {0, 3}, 5, {{0, 2}}),
                entry({2, -2}, {1, 2}, {1, -3}, {0, 3}, 6),
                entry({2, -3}, {1, 0}, {1, 0}, {0, 3}),
                entry({2, -3}, {1, 1}, {1, 1}, {0, 1}, 4),
                entry({2, -3}, {1, 1}, {1, 0}, {0, 2}, 4, {{0, 2}}),
                entry({2, -3}, {1, 1}, {1, -1}, {0, 3}, 4),
                entry({2, -3}, {1, 2}, {1, 1}, {0, 0}, 5),
                entry({2, -3}, {1, 2}, {1, 0}, {0, 1}, 5, {{0, 2}}),
                entry({2, -3}, {1, 2}, {1, -1}, {0, 2}, 5, {{0, 2}}),
                entry({2, -3}, {1, 2}, {1, -2}, {0, 3}, 5),
                entry({2, -3}, {1, 3}, {1, -2}, {0, 2}, 6),
                entry({2, -3}, {1, 3}, {1, -1}, {0, 1}, 6),
                entry({2, -3}, {1, 3}, {1, 0}, {0, 0}, 6),
            },
            [](int m) {
                Rational M(m);
                return Rational(25, 4) * (Rational(3) * M * M - M - 6)
                       * (Rational(2) * M * M * M - M * M - Rational(11) * M + 6);
            }});

        // (m,3,3,0)
        fams.push_back({3, 3,
            {
                entry({2, 0}, {1, 0}, {1, 0}, {0, 0}, 3),
                entry({2, 0}, {1, 0}, {1, -1}, {0, 1}, 4),
                entry({2, 0}, {1, 0}, {1, -2}, {0, 2}, 5),
                entry({2, 0}, {1, 0}, {1, -3}, {0, 3}, 6),
                entry({2, -1}, {1, 1}, {1, 0}, {0, 0}, 4),
                entry({2, -1}, {1, 1}, {1, -1}, {0, 1}, 4),
                entry({2, -1}, {1, 1}, {1, -2}, {0, 2}, 5),
                entry({2, -1}, {1, 1}, {1, -3}, {0, 3}, 6),
                entry({2, -1}, {1, 0}, {1, 0}, {0, 1}, 3),
                entry({2, -1}, {1, 0}, {1, -1}, {0, 2}, 4),
                entry({2, -1}, {1, 0}, {1, -2}, {0, 3}, 5),
                entry({2, -2}, {1, 2}, {1, 0}, {0, 0}, 5),
                entry({2, -2}, {1, 2}, {1, -1}, {0, 1}, 5),
                entry({2, -2}, {1, 2}, {1, -2}, {0, 2}, 5),
                entry({2, -2}, {1, 2}, {1, -3}, {0, 3}, 6),
                entry({2, -2}, {1, 1}, {1, 0}, {0, 1}, 4),
                entry({2, -2}, {1, 1}, {1, -1}, {0, 2}, 4),
                entry({2, -2}, {1, 1}, {1, -2}, {0, 3}, 5),
                entry({2, -2}, {1, 0}, {1, 0}, {0, 2}, 3),
                entry({2, -2}, {1, 0}, {1, -1}, {0, 3}, 4),
                entry({2, -3}, {1, 3}, {1, 0}, {0, 0}, 6),
                entry({2, -3}, {1, 3}, {1, -1}, {0, 1}, 6),
                entry({2, -3}, {1, 3}, {1, -2}, {0, 2}, 6),
                entry({2, -3}, {1, 3}, {1, -3}, {0, 3}, 6),
                entry({2, -3}, {1, 2}, {1, 0}, {0, 1}, 5),
                entry({2, -3}, {1, 2}, {1, -1}, {0, 2}, 5),
                entry({2, -3}, {1, 2}, {1, -2}, {0, 3}, 5),
                entry({2, -3}, {1, 1}, {1, 0}, {0, 2}, 4),
                entry({2, -3}, {1, 1}, {1, -1}, {0, 3}, 4),
                entry({2, -3}, {1, 0}, {1, 0}, {0, 3}, 3),
            },
            [](int m) {
                Rational M(m);
                return Rational(25, 3) * (M - 2) * (M - 2) * (M + 1)
                       * (Rational(2) * M * M + M - 9);
            }});

        return fams;
    }();
    return families;
}

Weight4 k_family_lambda(const KFamily& fam, int m) {
    return {{m, fam.t, fam.s, 0}};
}

IrrepSum<Weight6> k_family_expected(const KFamily& fam, int m) {
    IrrepSum<Weight6> sum;
    for (const KEntry& e : fam.entries) {
        if (m < e.min_m) continue;
        Weight4 q{{e.coef[0].first * m + e.coef[0].second, e.coef[1].first * m + e.coef[1].second,
                   e.coef[2].first * m + e.coef[2].second, e.coef[3].first * m + e.coef[3].second}};
        if (!q.partition()) continue;
        int mult = 0;
        for (const auto& [from, value] : e.mult_steps)
            if (m >= from) mult = value;
        if (mult == 0) continue;
        sum[Weight6{q, Weight2{{m, m}}}.canonical()] += BigInt(mult);
    }
    return sum;
}

const std::vector<KbcRow>& kbc_table() {
    static const std::vector<KbcRow> rows = {
        {0, 0, 1},  {1, 0, 5},  {0, 1, 5},  {2, 0, 14}, {1, 1, 26},
        {0, 2, 14}, {3, 0, 30}, {2, 1, 71}, {1, 2, 71}, {0, 3, 30},
    };
    return rows;
}

}  // namespace tables
}  // namespace schurq
