#include "schurq/weights.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace schurq {

namespace {

std::vector<int> parse_csv_ints(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("weight: bad integer '" + std::string(tok) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string join_csv(std::span<const int> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

std::string Weight4::to_string() const { return join_csv(e); }

Weight4 Weight4::parse(std::string_view text) {
    auto v = parse_csv_ints(text);
    if (v.size() != 4) throw std::invalid_argument("weight: expected 4 entries in '" + std::string(text) + "'");
    return {{v[0], v[1], v[2], v[3]}};
}

std::string Weight2::to_string() const { return join_csv(e); }

Weight2 Weight2::parse(std::string_view text) {
    auto v = parse_csv_ints(text);
    if (v.size() != 2) throw std::invalid_argument("weight: expected 2 entries in '" + std::string(text) + "'");
    return {{v[0], v[1]}};
}

std::string Weight6::to_string() const { return q.to_string() + "|" + u.to_string(); }

Weight6 Weight6::parse(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos)
        throw std::invalid_argument("weight: expected 'a,b,c,d|e,f' in '" + std::string(text) + "'");
    return {Weight4::parse(text.substr(0, bar)), Weight2::parse(text.substr(bar + 1))};
}

bool is_dominant(std::span<const int> w) {
    if (w.size() != 2 && w.size() != 4 && w.size() != 6)
        throw std::invalid_argument("is_dominant: length must be 2, 4 or 6");
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    return true;
}

TwistedWeight4 dual_normalized(const Weight4& lambda) {
    if (!lambda.partition()) throw std::invalid_argument("dual_normalized: not a partition");
    Weight4 d{{lambda[0] - lambda[3], lambda[0] - lambda[2], lambda[0] - lambda[1], 0}};
    return {d, -lambda[0]};
}

TwistedWeight4 reduce(const Weight4& lambda) {
    if (!lambda.partition()) throw std::invalid_argument("reduce: not a partition");
    return {lambda.shifted(-lambda[3]), lambda[3]};
}

EndWeight end_weight(const Weight4& lambda) {
    auto d = dual_normalized(lambda);
    return {d.weight, lambda, -lambda[0]};
}

}  // namespace schurq
