#include "schurq/schur.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "schurq/rational.hpp"

namespace schurq {

namespace {

Rational weyl_dim_generic(std::span<const int> w) {
    Rational r(1);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            long d = static_cast<long>(j) - static_cast<long>(i);
            r *= Rational(w[i] - w[j] + d, d);
        }
    return r;
}

}  // namespace

BigInt weyl_dim_sl4(const Weight4& lambda) {
    if (!lambda.dominant()) throw std::invalid_argument("weyl_dim_sl4: not dominant");
    return weyl_dim_generic(lambda.e).to_integer();
}

BigInt weyl_dim_sl2(const Weight2& mu) {
    if (!mu.dominant()) throw std::invalid_argument("weyl_dim_sl2: not dominant");
    return BigInt(mu[0] - mu[1] + 1);
}

BigInt weyl_dim_sl6(const std::array<int, 6>& nu) {
    if (!is_dominant(nu)) throw std::invalid_argument("weyl_dim_sl6: not dominant");
    return weyl_dim_generic(nu).to_integer();
}

BigInt weyl_dim(const Weight6& w) {
    return weyl_dim_sl4(w.q) * weyl_dim_sl2(w.u);
}

namespace {

// All shapes reachable from `shape` by a horizontal strip of `m` boxes within
// four rows. Row r > 0 may grow at most to the previous row's old end (no two
// added boxes share a column).
void horizontal_strips(const Weight4& shape, int m, std::vector<Weight4>& out) {
    out.clear();
    for (int a0 = 0; a0 <= m; ++a0) {
        int r0 = shape[0] + a0;
        int cap1 = std::min(shape[0] - shape[1], m - a0);
        for (int a1 = 0; a1 <= cap1; ++a1) {
            int r1 = shape[1] + a1;
            int cap2 = std::min(shape[1] - shape[2], m - a0 - a1);
            for (int a2 = 0; a2 <= cap2; ++a2) {
                int r2 = shape[2] + a2;
                int a3 = m - a0 - a1 - a2;
                if (a3 < 0 || a3 > shape[2] - shape[3]) continue;
                int r3 = shape[3] + a3;
                Weight4 next{{r0, r1, r2, r3}};
                if (next.partition()) out.push_back(next);
            }
        }
    }
}

// Reading word of the filling recorded by the chain lambda = c[0] c= ... c= c[4]:
// row-major, right to left inside each row; the label of a box is the first
// step that covers it. Checks the lattice-word prefix condition.
bool lattice_word_ok(const Weight4& lambda, const std::array<Weight4, 5>& chain) {
    int count[5] = {0, 0, 0, 0, 0};
    for (int row = 0; row < 4; ++row) {
        for (int col = chain[4][row]; col > lambda[row]; --col) {
            int label = 1;
            while (chain[label][row] < col) ++label;
            ++count[label];
            if (label > 1 && count[label] > count[label - 1]) return false;
        }
    }
    return true;
}

struct LrKey {
    Weight4 a, b;
    friend auto operator<=>(const LrKey&, const LrKey&) = default;
};

std::mutex g_cache_mutex;
std::map<LrKey, IrrepSum<Weight4>> g_lr_cache;
std::map<Weight4, IrrepSum<Weight6>> g_end_cache;

IrrepSum<Weight4> lr_enumerate(const Weight4& base, const Weight4& added) {
    IrrepSum<Weight4> result;
    std::array<Weight4, 5> chain;
    chain[0] = base;

    // the first-row filter below: a box labelled >= 2 on the first row would
    // open the reading word with a letter above 1
    std::vector<Weight4> step1, step2, step3, step4;
    horizontal_strips(chain[0], added[0], step1);
    for (const Weight4& s1 : step1) {
        chain[1] = s1;
        horizontal_strips(chain[1], added[1], step2);
        for (const Weight4& s2 : step2) {
            if (s2[0] != s1[0]) continue;
            chain[2] = s2;
            horizontal_strips(chain[2], added[2], step3);
            for (const Weight4& s3 : step3) {
                if (s3[0] != s1[0]) continue;
                chain[3] = s3;
                horizontal_strips(chain[3], added[3], step4);
                for (const Weight4& s4 : step4) {
                    if (s4[0] != s1[0]) continue;
                    chain[4] = s4;
                    if (lattice_word_ok(base, chain)) result[s4] += BigInt(1);
                }
            }
        }
    }
    return result;
}

}  // namespace

IrrepSum<Weight4> pieri(const Weight4& lambda, int m) {
    if (!lambda.partition()) throw std::invalid_argument("pieri: not a partition");
    if (m < 0) throw std::invalid_argument("pieri: negative box count");
    std::vector<Weight4> shapes;
    horizontal_strips(lambda, m, shapes);
    IrrepSum<Weight4> result;
    for (const Weight4& s : shapes) result[s] = BigInt(1);
    return result;
}

IrrepSum<Weight4> littlewood_richardson(const Weight4& lambda, const Weight4& mu) {
    if (!lambda.partition() || !mu.partition())
        throw std::invalid_argument("littlewood_richardson: inputs must be partitions");
    // commutative; enumerate fillings over the larger base shape
    const Weight4& base = lambda.size() >= mu.size() ? lambda : mu;
    const Weight4& added = lambda.size() >= mu.size() ? mu : lambda;
    LrKey key{base, added};
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_lr_cache.find(key);
        if (it != g_lr_cache.end()) return it->second;
    }
    IrrepSum<Weight4> result = lr_enumerate(base, added);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_lr_cache.emplace(key, std::move(result)).first->second;
}

IrrepSum<Weight6> end_decomposition(const Weight4& lambda) {
    Weight4 red = reduce(lambda).weight;
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_end_cache.find(red);
        if (it != g_end_cache.end()) return it->second;
    }
    EndWeight ew = end_weight(red);
    IrrepSum<Weight4> lr = littlewood_richardson(ew.left, ew.right);
    Weight2 u{{red[0], red[0]}};
    IrrepSum<Weight6> result;
    for (const auto& [nu, mult] : lr) result[Weight6{nu, u}] = mult;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_end_cache.emplace(red, std::move(result)).first->second;
}

BigInt total_dimension(const IrrepSum<Weight4>& sum) {
    BigInt t(0);
    for (const auto& [w, mult] : sum) t += mult * weyl_dim_sl4(w);
    return t;
}

BigInt total_dimension(const IrrepSum<Weight6>& sum) {
    BigInt t(0);
    for (const auto& [w, mult] : sum) t += mult * weyl_dim(w);
    return t;
}

BigInt total_multiplicity(const IrrepSum<Weight6>& sum) {
    BigInt t(0);
    for (const auto& [w, mult] : sum) t += mult;
    return t;
}

void clear_schur_cache() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_lr_cache.clear();
    g_end_cache.clear();
}

}  // namespace schurq
