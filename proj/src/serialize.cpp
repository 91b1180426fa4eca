#include "schurq/serialize.hpp"

#include <filesystem>
#include <fstream>

namespace schurq {

Json to_json(const IrrepSum<Weight6>& sum) {
    Json arr = Json::array();
    for (const auto& [w, mult] : sum) {
        arr.push_back({{"weight", w.to_string()},
                       {"mult", mult.to_int64()},
                       {"dim", weyl_dim(w).to_int64()}});
    }
    return arr;
}

IrrepSum<Weight6> irrep_sum_from_json(const Json& j) {
    IrrepSum<Weight6> sum;
    for (const auto& rec : j)
        sum[Weight6::parse(rec.at("weight").get<std::string>())] =
            BigInt(rec.at("mult").get<std::int64_t>());
    return sum;
}

Json to_json(const CohClass& c) {
    return {{"a0", c.a0.to_string()}, {"a1", c.a1.to_string()}, {"a2", c.a2.to_string()},
            {"a3", c.a3.to_string()}, {"a4", c.a4.to_string()}, {"a5", c.a5.to_string()}};
}

CohClass coh_class_from_json(const Json& j) {
    return {Rational::parse(j.at("a0").get<std::string>()),
            Rational::parse(j.at("a1").get<std::string>()),
            Rational::parse(j.at("a2").get<std::string>()),
            Rational::parse(j.at("a3").get<std::string>()),
            Rational::parse(j.at("a4").get<std::string>()),
            Rational::parse(j.at("a5").get<std::string>())};
}

Json to_json(const LambdaPolys& lp) {
    return {{"rank", lp.r.to_int64()},   {"ell", lp.ell.to_string()},
            {"tau", lp.tau.to_string()}, {"delta", lp.delta.to_string()},
            {"xi", lp.xi.to_string()},   {"P", lp.P.to_string()}};
}

Json to_json(const E1Page& page) {
    Json rows = Json::array();
    for (const E1Entry& e : page.entries) {
        rows.push_back({{"mu", e.input.to_string()},
                        {"K", e.p},
                        {"H", e.q},
                        {"weight", e.weight_string()},
                        {"dim", e.dim.to_int64()},
                        {"mult", e.mult.to_int64()}});
    }
    return {{"lambda", page.lambda.to_string()}, {"rows", rows}};
}

Json to_json(const ExtReport& report) {
    Json ext = Json::array();
    Json provenance = Json::array();
    Json bounds = Json::array();
    for (const ExtValue& v : report.ext) {
        if (v.exact) {
            ext.push_back(v.value.to_int64());
            bounds.push_back(nullptr);
        } else {
            ext.push_back(nullptr);
            bounds.push_back(Json::array({v.lower.to_int64(), v.upper.to_int64()}));
        }
        provenance.push_back(to_string(v.provenance));
    }
    return {{"lambda", report.lambda.to_string()},
            {"ext", ext},
            {"bounds", bounds},
            {"provenance", provenance},
            {"chi", report.chi.to_int64()},
            {"exact", report.all_exact()}};
}

std::string cache_file_name(const Weight4& lambda) {
    std::string name = reduce(lambda).weight.to_string();
    for (char& c : name)
        if (c == ',') c = '_';
    return "end_" + name + ".json";
}

Json to_json(const PartitionCache& cache) {
    return {{"schema", kCacheSchema},
            {"lambda", reduce(cache.lambda).weight.to_string()},
            {"end", to_json(cache.end)},
            {"e1", to_json(cache.page)}};
}

std::optional<PartitionCache> cache_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("schema") || j["schema"] != kCacheSchema) return std::nullopt;
    PartitionCache cache;
    cache.lambda = Weight4::parse(j.at("lambda").get<std::string>());
    cache.end = irrep_sum_from_json(j.at("end"));
    const Json& page = j.at("e1");
    cache.page.lambda = Weight4::parse(page.at("lambda").get<std::string>());
    for (const auto& row : page.at("rows")) {
        E1Entry e;
        e.input = Weight6::parse(row.at("mu").get<std::string>());
        e.p = row.at("K").get<int>();
        e.q = row.at("H").get<int>();
        std::string ws = row.at("weight").get<std::string>();
        std::size_t pos = 0;
        for (int i = 0; i < 6; ++i) {
            std::size_t comma = ws.find(',', pos);
            e.weight[i] = std::stoi(ws.substr(pos, comma - pos));
            pos = comma + 1;
        }
        e.dim = BigInt(row.at("dim").get<std::int64_t>());
        e.mult = BigInt(row.at("mult").get<std::int64_t>());
        cache.page.entries.push_back(std::move(e));
    }
    return cache;
}

E1Page e1_page_cached(const Weight4& lambda, const std::string& cache_dir) {
    if (cache_dir.empty()) return e1_page(lambda);
    namespace fs = std::filesystem;
    fs::path file = fs::path(cache_dir) / cache_file_name(lambda);
    if (fs::exists(file)) {
        try {
            std::ifstream in(file);
            Json j = Json::parse(in);
            if (auto cache = cache_from_json(j)) {
                E1Page page = std::move(cache->page);
                page.lambda = lambda;
                return page;
            }
        } catch (const std::exception&) {
            // unreadable cache entries are recomputed below
        }
    }
    E1Page page = e1_page(lambda);
    std::error_code ec;
    fs::create_directories(cache_dir, ec);
    PartitionCache cache{lambda, end_decomposition(lambda), page};
    std::ofstream out(file);
    if (out) out << to_json(cache).dump(1) << "\n";
    return page;
}

}  // namespace schurq
