#include "schurq/koszul.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "schurq/chern.hpp"
#include "schurq/errors.hpp"

namespace schurq {

std::vector<Weight2> koszul_factors(int p) {
    switch (p) {
        case 0: return {Weight2{{0, 0}}};
        case 1: return {Weight2{{3, 0}}};
        case 2: return {Weight2{{5, 1}}, Weight2{{3, 3}}};
        case 3: return {Weight2{{6, 3}}};
        case 4: return {Weight2{{6, 6}}};
        default: throw std::out_of_range("koszul_factors: p must be in 0..4");
    }
}

std::string E1Entry::weight_string() const {
    std::string s;
    for (std::size_t i = 0; i < weight.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(weight[i]);
    }
    return s;
}

BigInt E1Page::euler_sum() const {
    BigInt t(0);
    for (const E1Entry& e : entries) {
        BigInt term = e.dim * e.mult;
        t += ((e.q - e.p) % 2 == 0) ? term : -term;
    }
    return t;
}

E1Page e1_page(const Weight4& lambda) {
    if (!lambda.partition()) throw std::invalid_argument("e1_page: not a partition");
    Weight4 red = reduce(lambda).weight;
    E1Page page;
    page.lambda = lambda;
    for (const auto& [factor, mult] : end_decomposition(red)) {
        for (int p = 0; p <= 4; ++p) {
            for (const Weight2& shift : koszul_factors(p)) {
                Weight6 w{factor.q, {{factor.u[0] + shift[0], factor.u[1] + shift[1]}}};
                BwbResult res = bwb(w);
                if (res.acyclic) continue;
                page.entries.push_back({factor, p, res.degree, res.weight, res.dim, mult});
            }
        }
    }
    std::sort(page.entries.begin(), page.entries.end(), [](const E1Entry& a, const E1Entry& b) {
        if (a.input != b.input) return a.input < b.input;
        if (a.p != b.p) return a.p < b.p;
        if (a.q != b.q) return a.q < b.q;
        return a.weight < b.weight;
    });
    // the alternating page sum must give back the Euler characteristic
    if (page.euler_sum() != chi_end(red))
        throw internal_error("e1_page: alternating sum disagrees with chi at " + red.to_string());
    return page;
}

std::array<bool, 5> degeneration_flags(const E1Page& page) {
    // occupied (p,q) positions per End summand
    std::map<Weight6, std::set<std::pair<int, int>>> occupied;
    for (const E1Entry& e : page.entries) occupied[e.input].insert({e.p, e.q});

    std::array<bool, 5> forced;
    forced.fill(true);
    for (const auto& [input, cells] : occupied) {
        for (const auto& [p, q] : cells) {
            int n = q - p;
            if (n < 0 || n > 4 || !forced[n]) continue;
            bool ok = true;
            for (int r = 1; r <= 4 && ok; ++r) {
                if (cells.count({p + r, q + r - 1})) ok = false;  // incoming d_r source
                if (cells.count({p - r, q - r + 1})) ok = false;  // outgoing d_r target
            }
            if (!ok) forced[n] = false;
        }
    }
    return forced;
}

std::string to_string(ExtProvenance p) {
    switch (p) {
        case ExtProvenance::Degeneration: return "forced-degeneration";
        case ExtProvenance::SerreDuality: return "serre-duality";
        case ExtProvenance::EulerCharacteristic: return "euler-characteristic";
        case ExtProvenance::KnownResolution: return "known-resolution";
    }
    return "?";
}

bool ExtReport::all_exact() const {
    return std::all_of(ext.begin(), ext.end(), [](const ExtValue& v) { return v.exact; });
}

std::optional<BigInt> known_resolution_ext1(const Weight4& lambda) {
    Weight4 red = reduce(lambda).weight;
    Weight4 reflected{{red[0], red[0] - red[2], red[0] - red[1], 0}};
    Weight4 key = std::min(red, reflected);
    static const std::map<Weight4, BigInt> registry = {
        {Weight4{{5, 3, 0, 0}}, BigInt(20)},
    };
    auto it = registry.find(key);
    if (it == registry.end()) return std::nullopt;
    return it->second;
}

ExtReport ext_report(const Weight4& lambda) {
    E1Page page = e1_page(lambda);
    std::array<bool, 5> forced = degeneration_flags(page);

    std::array<BigInt, 5> diag_sum;
    for (const E1Entry& e : page.entries) {
        int n = e.q - e.p;
        if (n >= 0 && n <= 4) diag_sum[n] += e.dim * e.mult;
    }

    ExtReport report;
    report.lambda = lambda;
    report.chi = chi_end(lambda);

    for (int n = 0; n <= 4; ++n) {
        if (forced[n]) {
            report.ext[n] = {true, diag_sum[n], BigInt(0), BigInt(0), ExtProvenance::Degeneration};
        } else {
            report.ext[n] = {false, BigInt(0), BigInt(0), diag_sum[n], ExtProvenance::Degeneration};
        }
    }

    // the one hand-resolved family datum
    if (!report.ext[1].exact) {
        if (auto ext1 = known_resolution_ext1(lambda)) {
            report.ext[1] = {true, *ext1, BigInt(0), BigInt(0), ExtProvenance::KnownResolution};
        }
    }

    // Serre duality on the K-trivial fourfold: ext^i = ext^{4-i} as dimensions
    for (int n : {3, 4}) {
        const ExtValue& partner = report.ext[4 - n];
        if (!report.ext[n].exact && partner.exact)
            report.ext[n] = {true, partner.value, BigInt(0), BigInt(0), ExtProvenance::SerreDuality};
    }
    for (int n : {0, 1}) {
        const ExtValue& partner = report.ext[4 - n];
        if (!report.ext[n].exact && partner.exact)
            report.ext[n] = {true, partner.value, BigInt(0), BigInt(0), ExtProvenance::SerreDuality};
    }

    // chi = 2 ext^0 - 2 ext^1 + ext^2 once Serre duality pairs the ends
    if (!report.ext[2].exact && report.ext[0].exact && report.ext[1].exact) {
        BigInt value = report.chi - BigInt(2) * report.ext[0].value + BigInt(2) * report.ext[1].value;
        report.ext[2] = {true, value, BigInt(0), BigInt(0), ExtProvenance::EulerCharacteristic};
    }
    // with bounds on ext^1, propagate the Euler constraint into ext^2 bounds
    if (!report.ext[2].exact && report.ext[0].exact && !report.ext[1].exact) {
        BigInt base = report.chi - BigInt(2) * report.ext[0].value;
        BigInt lo = base + BigInt(2) * report.ext[1].lower;
        BigInt hi = base + BigInt(2) * report.ext[1].upper;
        if (lo > report.ext[2].lower) report.ext[2].lower = lo;
        if (hi < report.ext[2].upper) report.ext[2].upper = hi;
        // mirror the ext^1 bounds into ext^3
        if (!report.ext[3].exact) {
            report.ext[3].lower = report.ext[1].lower;
            report.ext[3].upper = report.ext[1].upper;
        }
    }
    return report;
}

IrrepSum<Weight6> k_set(const Weight4& lambda) {
    if (!lambda.partition()) throw std::invalid_argument("k_set: not a partition");
    Weight4 up{{lambda[0] + 1, lambda[1], lambda[2], lambda[3]}};
    IrrepSum<Weight6> big = end_decomposition(up);
    IrrepSum<Weight6> small = end_decomposition(lambda);

    // compare canonically: +1 on all six entries matches the u-parts exactly
    IrrepSum<Weight6> result;
    for (auto& [w, mult] : big) result[w.canonical()] = mult;
    for (const auto& [w, mult] : small) {
        Weight6 c = w.shifted(1).canonical();
        auto it = result.find(c);
        if (it == result.end() || it->second < mult)
            throw internal_error("k_set: containment violated at " + w.to_string());
        it->second -= mult;
        if (it->second.is_zero()) result.erase(it);
    }
    // restore the natural u-part (l1+1, l1+1) of the larger partition
    IrrepSum<Weight6> shifted;
    int l1 = reduce(up).weight[0];
    for (const auto& [w, mult] : result) shifted[w.shifted(l1)] = mult;
    return shifted;
}

}  // namespace schurq
