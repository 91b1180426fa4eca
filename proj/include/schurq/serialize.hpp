#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "schurq/chern.hpp"
#include "schurq/cohring.hpp"
#include "schurq/koszul.hpp"
#include "schurq/schur.hpp"

namespace schurq {

using Json = nlohmann::ordered_json;

// list of {weight: "a,b,c,d|e,f", mult: n, dim: n}
Json to_json(const IrrepSum<Weight6>& sum);
IrrepSum<Weight6> irrep_sum_from_json(const Json& j);

// {a0: "n/d", ..., a5: "n/d"}
Json to_json(const CohClass& c);
CohClass coh_class_from_json(const Json& j);

Json to_json(const LambdaPolys& lp);
Json to_json(const E1Page& page);
Json to_json(const ExtReport& report);

// Persistent per-partition cache: end decomposition and first-page rows,
// keyed by the canonical partition string. Purely an optimization; a stale or
// deleted cache never changes results.
inline constexpr const char* kCacheSchema = "schurq-cache-v1";

struct PartitionCache {
    Weight4 lambda;
    IrrepSum<Weight6> end;
    E1Page page;
};

std::string cache_file_name(const Weight4& lambda);
Json to_json(const PartitionCache& cache);
std::optional<PartitionCache> cache_from_json(const Json& j);

// Reads the cache for lambda if present and well-formed, otherwise computes
// and (best effort) writes it. Empty dir means no caching.
E1Page e1_page_cached(const Weight4& lambda, const std::string& cache_dir);

}  // namespace schurq
