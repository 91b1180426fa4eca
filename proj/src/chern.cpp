#include "schurq/chern.hpp"

#include "schurq/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace schurq {

Rational rank_poly(const Rational& m, const Rational& t, const Rational& s) {
    return (m + 3) * (t + 2) * (s + 1) * (m - t + 1) * (m - s + 2) * (t - s + 1) / Rational(12);
}

Rational ell_poly(const Rational& m, const Rational& t, const Rational& s) {
    return (m + t + s) / Rational(4);
}

Rational tau_poly(const Rational& m, const Rational& t, const Rational& s) {
    return (Rational(-2) * (m * t + m * s + t * s) + Rational(3) * m + t - s) / Rational(3);
}

Rational delta_poly(const Rational& m, const Rational& t, const Rational& s) {
    Rational ell = ell_poly(m, t, s);
    return (Rational(4) * ell * ell + tau_poly(m, t, s)) / Rational(5);
}

Rational xi_poly(const Rational& m, const Rational& t, const Rational& s) {
    Rational alpha = Rational(9) * t * t + Rational(21) * t * s + Rational(9) * s * s
                   - Rational(33) * t - Rational(30) * s + Rational(21);
    Rational beta = Rational(21) * t * t * s + Rational(21) * t * s * s - Rational(15) * t * t
                  - Rational(18) * t * s + Rational(6) * s * s + t - Rational(8) * s - Rational(6);
    Rational gamma = Rational(9) * t * t * s * s - Rational(9) * t * t * s + Rational(9) * t * s * s
                   - Rational(3) * t * t + Rational(13) * t * s - Rational(3) * s * s
                   - Rational(14) * t + Rational(14) * s;
    return (alpha * m * m + beta * m + gamma) / Rational(60);
}

Rational p_poly(const Rational& m, const Rational& t, const Rational& s) {
    Rational ell = ell_poly(m, t, s);
    Rational tau = tau_poly(m, t, s);
    Rational xi = xi_poly(m, t, s);
    Rational ell2 = ell * ell;
    return Rational(1) - Rational(23) * (Rational(4) * ell2 + tau) / Rational(20)
         + (Rational(576) * ell2 * ell2 + Rational(288) * ell2 * tau
            + Rational(69, 4) * tau * tau + Rational(50) * xi) / Rational(100);
}

LambdaPolys lambda_polys(const Weight4& lambda) {
    Weight4 red = reduce(lambda).weight;
    Rational m(red[0]), t(red[1]), s(red[2]);
    LambdaPolys lp;
    lp.r = weyl_dim_sl4(lambda);
    lp.ell = ell_poly(m, t, s);
    lp.tau = tau_poly(m, t, s);
    lp.delta = delta_poly(m, t, s);
    lp.xi = xi_poly(m, t, s);
    lp.P = p_poly(m, t, s);
    return lp;
}

Rational delta_general(const Weight4& lambda) {
    if (!lambda.partition()) throw std::invalid_argument("delta_general: not a partition");
    Rational sq(0), cross(0);
    for (int i = 0; i < 4; ++i) {
        sq += Rational(static_cast<std::int64_t>(lambda[i]) * lambda[i]);
        for (int j = i + 1; j < 4; ++j)
            cross += Rational(static_cast<std::int64_t>(lambda[i]) * lambda[j]);
    }
    Rational lin = Rational(12) * Rational(lambda[0]) + Rational(4) * Rational(lambda[1])
                 - Rational(4) * Rational(lambda[2]) - Rational(12) * Rational(lambda[3]);
    return (Rational(3) * sq - Rational(2) * cross + lin) / Rational(60);
}

CohClass ch_schur_closed(const Weight4& lambda) {
    auto [red, twist] = reduce(lambda);
    Rational m(red[0]), t(red[1]), s(red[2]);
    Rational r = rank_poly(m, t, s);
    Rational ell = ell_poly(m, t, s);
    Rational tau = tau_poly(m, t, s);
    Rational delta = delta_poly(m, t, s);
    Rational xi = xi_poly(m, t, s);

    CohClass ch;
    ch.a0 = r;
    ch.a1 = ell * r;
    ch.a2 = (ell * ell - delta / Rational(4)) * r / Rational(2);
    ch.a3 = delta * r;
    ch.a4 = tau * ell * r;
    ch.a5 = xi * r;
    if (twist != 0) ch = coh::mul(ch, coh::exp_c1(Rational(twist)));
    return ch;
}

// ---------------------------------------------------------------------------
// Splitting-principle oracle
// ---------------------------------------------------------------------------

namespace {

using Mono = std::array<int, 4>;                  // exponents, total degree <= 4
using Poly = std::map<Mono, Rational>;            // truncated polynomial ring

int mono_deg(const Mono& m) { return m[0] + m[1] + m[2] + m[3]; }

// Content counts (n1..n4) of all semistandard tableaux of shape lambda with
// entries in 1..4, accumulated as multiplicities.
void ssyt_contents(const Weight4& shape, std::map<Mono, BigInt>& contents) {
    // fill row by row, left to right; value(r,c) >= value(r,c-1), > value(r-1,c)
    std::array<std::vector<int>, 4> rows;
    for (int r = 0; r < 4; ++r) rows[r].assign(static_cast<std::size_t>(std::max(shape[r], 0)), 0);
    Mono content{0, 0, 0, 0};

    auto rec = [&](auto&& self, int r, int c) -> void {
        while (r < 4 && shape[r] == 0) ++r, c = 0;
        if (r == 4) {
            contents[content] += BigInt(1);
            return;
        }
        if (c == shape[r]) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);
        if (r > 0 && c < shape[r - 1]) lo = std::max(lo, rows[r - 1][c] + 1);
        for (int v = std::max(lo, r + 1); v <= 4; ++v) {
            rows[r][c] = v;
            ++content[v - 1];
            self(self, r, c + 1);
            --content[v - 1];
        }
    };
    rec(rec, 0, 0);
}

// 24 * exp(n1 x1 + ... + n4 x4) truncated at total degree 4, accumulated with
// an integer multiplier.
void accumulate_exp(const Mono& n, const BigInt& count, std::map<Mono, BigInt>& acc) {
    static const int fact[5] = {1, 1, 2, 6, 24};
    Mono d{0, 0, 0, 0};
    auto rec = [&](auto&& self, int var, int used) -> void {
        if (var == 4) {
            // 24 / prod(d_i!) * prod(n_i^{d_i})
            long scale = 24;
            for (int i = 0; i < 4; ++i) scale /= fact[d[i]];
            BigInt term(scale);
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < d[i]; ++k) term *= BigInt(n[i]);
            if (!term.is_zero()) acc[d] += term * count;
            return;
        }
        for (int e = 0; e + used <= 4; ++e) {
            d[var] = e;
            self(self, var + 1, used + e);
        }
        d[var] = 0;
    };
    rec(rec, 0, 0);
}

// power sums of the four variables
Poly power_sum(int k) {
    Poly p;
    for (int i = 0; i < 4; ++i) {
        Mono m{0, 0, 0, 0};
        m[i] = k;
        p[m] = Rational(1);
    }
    return p;
}

Poly poly_mul_trunc(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Mono m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]};
            if (mono_deg(m) > 4) continue;
            r[m] += ca * cb;
        }
    return r;
}

struct PBasis {
    std::vector<std::vector<int>> parts;  // partitions of d
    std::vector<Poly> polys;              // corresponding p-monomials
};

const PBasis& p_basis(int d) {
    static const std::array<PBasis, 5> bases = [] {
        std::array<PBasis, 5> b;
        const std::vector<std::vector<std::vector<int>>> partitions = {
            {{}},
            {{1}},
            {{1, 1}, {2}},
            {{1, 1, 1}, {2, 1}, {3}},
            {{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}},
        };
        for (int d = 1; d <= 4; ++d) {
            for (const auto& part : partitions[d]) {
                Poly p{{Mono{0, 0, 0, 0}, Rational(1)}};
                for (int k : part) p = poly_mul_trunc(p, power_sum(k));
                b[d].parts.push_back(part);
                b[d].polys.push_back(std::move(p));
            }
        }
        return b;
    }();
    return bases[d];
}

// Express the homogeneous degree-d part of a symmetric polynomial in the
// power-sum monomial basis (Gaussian elimination over the monomial
// coefficients; the system is consistent by symmetry).
std::vector<Rational> p_coordinates(const Poly& sym, int d) {
    const PBasis& basis = p_basis(d);
    const std::size_t n = basis.polys.size();

    std::vector<Mono> monos;
    for (const auto& [m, c] : sym)
        if (mono_deg(m) == d) monos.push_back(m);
    for (const Poly& p : basis.polys)
        for (const auto& [m, c] : p)
            if (std::find(monos.begin(), monos.end(), m) == monos.end()) monos.push_back(m);

    // rows: one per monomial; columns: basis coefficients | rhs
    std::vector<std::vector<Rational>> mat(monos.size(), std::vector<Rational>(n + 1));
    for (std::size_t row = 0; row < monos.size(); ++row) {
        for (std::size_t col = 0; col < n; ++col) {
            auto it = basis.polys[col].find(monos[row]);
            if (it != basis.polys[col].end()) mat[row][col] = it->second;
        }
        auto it = sym.find(monos[row]);
        if (it != sym.end()) mat[row][n] = it->second;
    }

    std::vector<Rational> result(n);
    std::size_t row = 0;
    std::vector<std::size_t> pivot_rows;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = row;
        while (piv < mat.size() && mat[piv][col].is_zero()) ++piv;
        if (piv == mat.size()) throw internal_error("p_coordinates: singular basis");
        std::swap(mat[row], mat[piv]);
        Rational inv = Rational(1) / mat[row][col];
        for (auto& x : mat[row]) x *= inv;
        for (std::size_t r2 = 0; r2 < mat.size(); ++r2) {
            if (r2 == row || mat[r2][col].is_zero()) continue;
            Rational f = mat[r2][col];
            for (std::size_t c2 = col; c2 <= n; ++c2) mat[r2][c2] -= f * mat[row][c2];
        }
        pivot_rows.push_back(row);
        ++row;
    }
    for (std::size_t r2 = row; r2 < mat.size(); ++r2)
        if (!mat[r2][n].is_zero()) throw internal_error("p_coordinates: inconsistent system");
    for (std::size_t col = 0; col < n; ++col) result[col] = mat[pivot_rows[col]][n];
    return result;
}

// p_k as ring classes: p1 = c1, p2 = 2 ch2, p3 = 6 ch3, p4 = 24 ch4
CohClass p_class(int k) {
    switch (k) {
        case 1: return coh::c1();
        case 2: return coh::ch2() * Rational(2);
        case 3: return coh::ch3() * Rational(6);
        case 4: return coh::ch4() * Rational(24);
        default: throw std::logic_error("p_class: bad index");
    }
}

}  // namespace

CohClass ch_schur_oracle(const Weight4& lambda) {
    if (!lambda.partition()) throw std::invalid_argument("ch_schur_oracle: not a partition");

    std::map<Mono, BigInt> contents;
    ssyt_contents(lambda, contents);

    std::map<Mono, BigInt> scaled;  // 24 * sum over tableaux of exp(weight)
    for (const auto& [n, count] : contents) accumulate_exp(n, count, scaled);

    Poly sym;
    for (const auto& [m, c] : scaled) sym[m] = Rational(c, BigInt(24));

    CohClass ch = coh::one() * sym[Mono{0, 0, 0, 0}];
    for (int d = 1; d <= 4; ++d) {
        const PBasis& basis = p_basis(d);
        std::vector<Rational> coords = p_coordinates(sym, d);
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i].is_zero()) continue;
            CohClass term = coh::one();
            for (int k : basis.parts[i]) term = coh::mul(term, p_class(k));
            ch = ch + term * coords[i];
        }
    }
    return ch;
}

// ---------------------------------------------------------------------------
// Symmetric powers via the Stirling-weighted sub-partition sum
// ---------------------------------------------------------------------------

namespace {

BigInt stirling2(int n, int k) {
    if (n == 0 && k == 0) return BigInt(1);
    if (n <= 0 || k <= 0 || k > n) return BigInt(0);
    std::vector<std::vector<BigInt>> table(n + 1, std::vector<BigInt>(k + 1, BigInt(0)));
    table[0][0] = BigInt(1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            table[i][j] = BigInt(j) * table[i - 1][j] + table[i - 1][j - 1];
    return table[n][k];
}

// binom(m+3, m-|mu|) as a value that vanishes when m < |mu|
BigInt binom_shift(int m, int drop) {
    if (m - drop < 0) return BigInt(0);
    return BigInt::binomial(static_cast<unsigned>(m + 3), static_cast<unsigned>(m - drop));
}

}  // namespace

CohClass ch_sym_stirling(int m) {
    if (m < 0) throw std::invalid_argument("ch_sym_stirling: negative power");

    // partitions with all parts nonzero and size <= 4 (higher degrees vanish),
    // with norm = prod of multiplicities' factorials
    struct Term {
        std::vector<int> parts;
        long norm;
    };
    static const std::vector<Term> shapes = {
        {{1}, 1},          {{2}, 1},          {{1, 1}, 2},    {{3}, 1},
        {{2, 1}, 1},       {{1, 1, 1}, 6},    {{4}, 1},       {{3, 1}, 1},
        {{2, 2}, 2},       {{2, 1, 1}, 2},    {{1, 1, 1, 1}, 24},
    };

    CohClass ch = coh::one() * Rational(BigInt::binomial(static_cast<unsigned>(m + 3), 3));
    for (const auto& shape : shapes) {
        // sum over tuples mu <= lambda componentwise with mu_i >= 1; the norm
        // divides out the symmetry among equal parts
        Rational weight(0);
        std::vector<int> mu(shape.parts.size(), 1);
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == shape.parts.size()) {
                int size = 0;
                BigInt w(1);
                for (std::size_t j = 0; j < mu.size(); ++j) {
                    size += mu[j];
                    w *= BigInt::factorial(static_cast<unsigned>(mu[j] - 1));
                    w *= stirling2(shape.parts[j], mu[j]);
                }
                weight += Rational(w * binom_shift(m, size));
                return;
            }
            for (int v = 1; v <= shape.parts[i]; ++v) {
                mu[i] = v;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
        if (weight.is_zero()) continue;

        CohClass prod = coh::one();
        for (int part : shape.parts) {
            CohClass chp = part == 1   ? coh::c1()
                           : part == 2 ? coh::ch2()
                           : part == 3 ? coh::ch3()
                                       : coh::ch4();
            prod = coh::mul(prod, chp);
        }
        ch = ch + prod * (weight / Rational(shape.norm));
    }
    return ch;
}

CohClass discriminant(const CohClass& ch) {
    CohClass c1part = coh::c1() * ch.a1;
    CohClass ch2part = coh::c1_sq() * ch.a2 + coh::ch2() * ch.a3;
    return coh::mul(c1part, c1part) - ch2part * (Rational(2) * ch.a0);
}

CohClass xi_invariant(const CohClass& ch) {
    CohClass ch2part = coh::c1_sq() * ch.a2 + coh::ch2() * ch.a3;
    CohClass c1part = coh::c1() * ch.a1;
    CohClass ch3part = coh::ch3() * ch.a4;
    return coh::mul(ch2part, ch2part) - coh::mul(c1part, ch3part) * Rational(2)
         + coh::ch4() * (Rational(2) * ch.a0 * ch.a5);
}

std::optional<Rational> modular_coefficient(const CohClass& ch) {
    CohClass d = discriminant(ch);
    if (d.a3 == d.a2 * Rational(-8)) return d.a2;
    return std::nullopt;
}

BigInt chi_end(const Weight4& lambda) {
    LambdaPolys lp = lambda_polys(lambda);
    return (Rational(3) * lp.P * Rational(lp.r) * Rational(lp.r)).to_integer();
}

SigmaUDiscriminant delta_sigma_U(const Weight2& mu) {
    if (!mu.dominant()) throw std::invalid_argument("delta_sigma_U: not dominant");
    Rational diff(mu[0] - mu[1]);
    Rational rho = (diff * diff + Rational(2) * diff) / Rational(6);
    Rational rk = diff + Rational(1);
    Rational coeff = rho / Rational(2) * rk * rk;
    CohClass deltaU = coh::c1_sq() * Rational(3, 2) - coh::c2X() * Rational(1, 2);
    return {coeff, deltaU * coeff};
}

MixedModular mixed_modular(const Weight4& lambda, const Weight2& mu) {
    if (!lambda.partition()) throw std::invalid_argument("mixed_modular: lambda not a partition");
    // Delta(E (x) F) = rk(F)^2 Delta(E) + rk(E)^2 Delta(F)
    Rational rQ(weyl_dim_sl4(lambda));
    Rational rU(weyl_dim_sl2(mu));
    CohClass dQ = discriminant(ch_schur_closed(lambda));
    SigmaUDiscriminant dU = delta_sigma_U(mu);
    CohClass total = dQ * (rU * rU) + dU.value * (rQ * rQ);
    bool modular = total.a3 == total.a2 * Rational(-8);
    return {modular, total};
}

}  // namespace schurq
