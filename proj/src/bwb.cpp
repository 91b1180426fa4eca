#include "schurq/bwb.hpp"

#include <algorithm>
#include <stdexcept>

#include "schurq/schur.hpp"

namespace schurq {

std::string BwbResult::weight_string() const {
    std::string s;
    for (std::size_t i = 0; i < weight.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(weight[i]);
    }
    return s;
}

int inversion_count(const std::array<int, 6>& v) {
    int inv = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] < v[j]) ++inv;
    return inv;
}

BwbResult bwb(const Weight6& w) {
    if (!w.dominant()) throw std::invalid_argument("bwb: both parts must be dominant");
    static constexpr std::array<int, 6> delta = {5, 4, 3, 2, 1, 0};
    std::array<int, 6> v = {w.q[0], w.q[1], w.q[2], w.q[3], w.u[0], w.u[1]};
    for (std::size_t i = 0; i < 6; ++i) v[i] += delta[i];

    std::array<int, 6> sorted = v;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    for (std::size_t i = 0; i + 1 < 6; ++i)
        if (sorted[i] == sorted[i + 1]) return BwbResult{};

    BwbResult r;
    r.acyclic = false;
    r.degree = inversion_count(v);
    for (std::size_t i = 0; i < 6; ++i) r.weight[i] = sorted[i] - delta[i];
    int last = r.weight[5];
    for (auto& x : r.weight) x -= last;
    r.dim = weyl_dim_sl6(r.weight);
    return r;
}

}  // namespace schurq
