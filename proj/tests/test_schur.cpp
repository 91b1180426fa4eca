#include <thread>

#include "doctest.h"
#include "schurq/schur.hpp"

using namespace schurq;

namespace {

IrrepSum<Weight4> sum_of(std::initializer_list<std::pair<Weight4, int>> items) {
    IrrepSum<Weight4> s;
    for (const auto& [w, m] : items) s[w] = BigInt(m);
    return s;
}

}  // namespace

TEST_CASE("weyl dimensions") {
    CHECK(weyl_dim_sl4(Weight4{{2, 1, 0, 0}}) == BigInt(20));
    CHECK(weyl_dim_sl4(Weight4{{3, 2, 1, 0}}) == BigInt(64));
    for (int m = 0; m <= 12; ++m)
        CHECK(weyl_dim_sl4(Weight4{{m, 0, 0, 0}}) == BigInt::binomial(m + 3, 3));
    CHECK(weyl_dim_sl4(Weight4{{5, 5, 5, 5}}) == BigInt(1));

    CHECK(weyl_dim_sl2(Weight2{{3, 0}}) == BigInt(4));
    CHECK(weyl_dim_sl2(Weight2{{5, 1}}) == BigInt(5));
    CHECK(weyl_dim_sl2(Weight2{{3, 3}}) == BigInt(1));

    CHECK(weyl_dim_sl6({1, 1, 1, 0, 0, 0}) == BigInt(20));
    CHECK(weyl_dim_sl6({2, 2, 1, 1, 0, 0}) == BigInt(189));
    CHECK(weyl_dim_sl6({2, 1, 1, 1, 1, 0}) == BigInt(35));
    CHECK(weyl_dim_sl6({2, 2, 2, 0, 0, 0}) == BigInt(175));
    CHECK(weyl_dim_sl6({4, 2, 0, 0, 0, 0}) == BigInt(1134));
}

TEST_CASE("pieri rule") {
    CHECK(pieri(Weight4{{3, 2, 0, 0}}, 1) ==
          sum_of({{{{4, 2, 0, 0}}, 1}, {{{3, 3, 0, 0}}, 1}, {{{3, 2, 1, 0}}, 1}}));
    CHECK(pieri(Weight4{{2, 0, 0, 0}}, 2) ==
          sum_of({{{{4, 0, 0, 0}}, 1}, {{{3, 1, 0, 0}}, 1}, {{{2, 2, 0, 0}}, 1}}));
    CHECK(pieri(Weight4{{5, 3, 2, 1}}, 0) == sum_of({{{{5, 3, 2, 1}}, 1}}));
}

TEST_CASE("littlewood-richardson examples") {
    CHECK(littlewood_richardson(Weight4{{2, 1, 0, 0}}, Weight4{{2, 2, 1, 0}}) ==
          sum_of({{{{4, 3, 1, 0}}, 1},
                  {{{4, 2, 2, 0}}, 1},
                  {{{4, 2, 1, 1}}, 1},
                  {{{3, 3, 2, 0}}, 1},
                  {{{3, 3, 1, 1}}, 1},
                  {{{3, 2, 2, 1}}, 2},
                  {{{2, 2, 2, 2}}, 1}}));

    for (int m = 1; m <= 5; ++m) {
        IrrepSum<Weight4> expected;
        for (int i = 0; i <= m; ++i) expected[Weight4{{2 * m - i, m, m, i}}] = BigInt(1);
        CHECK(littlewood_richardson(Weight4{{m, 0, 0, 0}}, Weight4{{m, m, m, 0}}) == expected);
    }

    CHECK(littlewood_richardson(Weight4{{0, 0, 0, 0}}, Weight4{{4, 2, 1, 0}}) ==
          sum_of({{{{4, 2, 1, 0}}, 1}}));
}

TEST_CASE("littlewood-richardson properties") {
    // dimension conservation, commutativity, and pieri as the one-row case
    std::vector<Weight4> sample;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= b; ++c) sample.push_back(Weight4{{a, b, c, 0}});
    sample.push_back(Weight4{{6, 4, 2, 0}});
    sample.push_back(Weight4{{5, 5, 3, 2}});

    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = i; j < sample.size(); ++j) {
            auto lr = littlewood_richardson(sample[i], sample[j]);
            CHECK(total_dimension(lr) == weyl_dim_sl4(sample[i]) * weyl_dim_sl4(sample[j]));
            CHECK(lr == littlewood_richardson(sample[j], sample[i]));
        }

    for (const Weight4& l : sample)
        for (int m = 0; m <= 4; ++m)
            CHECK(littlewood_richardson(l, Weight4{{m, 0, 0, 0}}) == pieri(l, m));
}

TEST_CASE("endomorphism decompositions") {
    IrrepSum<Weight6> end21 = end_decomposition(Weight4{{2, 1, 0, 0}});
    IrrepSum<Weight6> expected21;
    auto put = [](IrrepSum<Weight6>& s, std::array<int, 4> q, int u, int mult) {
        s[Weight6{{q}, {{u, u}}}] = BigInt(mult);
    };
    put(expected21, {4, 3, 1, 0}, 2, 1);
    put(expected21, {4, 2, 2, 0}, 2, 1);
    put(expected21, {4, 2, 1, 1}, 2, 1);
    put(expected21, {3, 3, 2, 0}, 2, 1);
    put(expected21, {3, 3, 1, 1}, 2, 1);
    put(expected21, {3, 2, 2, 1}, 2, 2);
    put(expected21, {2, 2, 2, 2}, 2, 1);
    CHECK(end21 == expected21);

    IrrepSum<Weight6> end321 = end_decomposition(Weight4{{3, 2, 1, 0}});
    IrrepSum<Weight6> expected321;
    put(expected321, {6, 4, 2, 0}, 3, 1);
    put(expected321, {6, 4, 1, 1}, 3, 1);
    put(expected321, {6, 3, 3, 0}, 3, 1);
    put(expected321, {6, 3, 2, 1}, 3, 2);
    put(expected321, {6, 2, 2, 2}, 3, 1);
    put(expected321, {5, 5, 2, 0}, 3, 1);
    put(expected321, {5, 5, 1, 1}, 3, 1);
    put(expected321, {5, 4, 3, 0}, 3, 2);
    put(expected321, {5, 4, 2, 1}, 3, 4);
    put(expected321, {5, 3, 3, 1}, 3, 3);
    // mult 3, not 1: the three lower summands must close the dimension count
    // to 64^2, and the recursion step from (2,2,1,0) needs two new copies
    put(expected321, {5, 3, 2, 2}, 3, 3);
    put(expected321, {4, 4, 4, 0}, 3, 1);
    put(expected321, {4, 4, 3, 1}, 3, 3);
    put(expected321, {4, 4, 2, 2}, 3, 2);
    put(expected321, {4, 3, 3, 2}, 3, 3);
    put(expected321, {3, 3, 3, 3}, 3, 1);
    CHECK(end321 == expected321);

    for (int m = 0; m <= 6; ++m) {
        IrrepSum<Weight6> expected;
        for (int n = 0; n <= m; ++n)
            expected[Weight6{{{2 * n, n, n, 0}}, {{n, n}}}.canonical()] = BigInt(1);
        IrrepSum<Weight6> got;
        for (const auto& [w, mult] : end_decomposition(Weight4{{m, 0, 0, 0}}))
            got[w.canonical()] = mult;
        CHECK(got == expected);
    }

    // total dimension is the rank squared; twisting does not change End
    for (const Weight4& l : {Weight4{{4, 2, 1, 0}}, Weight4{{3, 3, 0, 0}}, Weight4{{5, 2, 2, 1}}}) {
        BigInt r = weyl_dim_sl4(l);
        CHECK(total_dimension(end_decomposition(l)) == r * r);
    }
    CHECK(end_decomposition(Weight4{{4, 3, 2, 1}}) == end_decomposition(Weight4{{3, 2, 1, 0}}));
}

TEST_CASE("littlewood-richardson associativity") {
    // convolve (lambda (x) mu) (x) nu against lambda (x) (mu (x) nu)
    const std::vector<Weight4> pool = {Weight4{{2, 1, 0, 0}}, Weight4{{3, 1, 1, 0}},
                                       Weight4{{2, 2, 0, 0}}, Weight4{{4, 2, 1, 0}},
                                       Weight4{{1, 1, 1, 0}}};
    auto convolve = [](const IrrepSum<Weight4>& sum, const Weight4& w) {
        IrrepSum<Weight4> out;
        for (const auto& [alpha, mult] : sum)
            for (const auto& [beta, inner] : littlewood_richardson(alpha, w))
                out[beta] += mult * inner;
        return out;
    };
    for (const Weight4& a : pool)
        for (const Weight4& b : pool)
            for (const Weight4& c : pool) {
                IrrepSum<Weight4> left = convolve(littlewood_richardson(a, b), c);
                IrrepSum<Weight4> right;
                for (const auto& [beta, inner] : littlewood_richardson(b, c))
                    for (const auto& [nu, outer] : littlewood_richardson(a, beta))
                        right[nu] += inner * outer;
                CHECK(left == right);
            }
}

TEST_CASE("the identity and obstruction summands of End") {
    const Weight6 unit = Weight6{{{0, 0, 0, 0}}, {{0, 0}}};
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= b; ++c) {
                Weight4 l{{a, b, c, 0}};
                BigInt unit_mult(0), obstruction_mult(0);
                Weight6 obstruction = Weight6{{{a + 2, a, a, a - 2}}, {{a, a}}}.canonical();
                for (const auto& [w, mult] : end_decomposition(l)) {
                    if (w.canonical() == unit) unit_mult += mult;
                    if (a >= 2 && w.canonical() == obstruction) obstruction_mult += mult;
                }
                CHECK(unit_mult == BigInt(1));
                if (a >= 2) CHECK(obstruction_mult >= BigInt(1));
            }
}

TEST_CASE("decompositions stay consistent under concurrent callers") {
    clear_schur_cache();
    const Weight4 l{{5, 3, 1, 0}};
    const Weight4 mu{{4, 2, 2, 0}};
    IrrepSum<Weight4> expected = littlewood_richardson(l, mu);
    clear_schur_cache();
    std::vector<std::thread> workers;
    std::array<bool, 8> agree{};
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&, t] {
            agree[t] = littlewood_richardson(l, mu) == expected &&
                       total_dimension(end_decomposition(l)) ==
                           weyl_dim_sl4(l) * weyl_dim_sl4(l);
        });
    for (auto& w : workers) w.join();
    for (bool ok : agree) CHECK(ok);
}
