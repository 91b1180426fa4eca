#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "schurq/serialize.hpp"

using namespace schurq;

TEST_CASE("irrep sum records round trip") {
    IrrepSum<Weight6> sum = end_decomposition(Weight4{{2, 1, 0, 0}});
    Json j = to_json(sum);
    CHECK(j.is_array());
    CHECK(j.size() == 7);
    CHECK(irrep_sum_from_json(j) == sum);
    // record shape
    CHECK(j[0].contains("weight"));
    CHECK(j[0].contains("mult"));
    CHECK(j[0].contains("dim"));
}

TEST_CASE("cohomology class fraction strings") {
    CohClass c{Rational(20), Rational(15), Rational(4), Rational(13), Rational(15), Rational(-23, 2)};
    Json j = to_json(c);
    CHECK(j["a5"] == "-23/2");
    CHECK(coh_class_from_json(j) == c);
}

TEST_CASE("ext report layout") {
    Json j = to_json(ext_report(Weight4{{2, 1, 0, 0}}));
    CHECK(j["ext"] == Json::array({1, 20, 401, 20, 1}));
    CHECK(j["chi"] == 363);
    CHECK(j["exact"] == true);
}

TEST_CASE("page cache round trips through disk") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "schurq_cache_test";
    fs::remove_all(dir);

    Weight4 l{{2, 1, 0, 0}};
    E1Page fresh = e1_page_cached(l, dir.string());
    CHECK(fs::exists(dir / cache_file_name(l)));
    E1Page reread = e1_page_cached(l, dir.string());
    REQUIRE(fresh.entries.size() == reread.entries.size());
    for (std::size_t i = 0; i < fresh.entries.size(); ++i) {
        CHECK(fresh.entries[i].input == reread.entries[i].input);
        CHECK(fresh.entries[i].p == reread.entries[i].p);
        CHECK(fresh.entries[i].q == reread.entries[i].q);
        CHECK(fresh.entries[i].weight == reread.entries[i].weight);
        CHECK(fresh.entries[i].dim == reread.entries[i].dim);
        CHECK(fresh.entries[i].mult == reread.entries[i].mult);
    }
    // a clobbered cache is ignored, not trusted
    {
        std::ofstream bad(dir / cache_file_name(l));
        bad << "{\"schema\": \"something-else\"}";
    }
    E1Page recomputed = e1_page_cached(l, dir.string());
    CHECK(recomputed.entries.size() == fresh.entries.size());
    // so is one that does not even parse
    {
        std::ofstream bad(dir / cache_file_name(l));
        bad << "not json at all {{{";
    }
    E1Page recovered = e1_page_cached(l, dir.string());
    CHECK(recovered.entries.size() == fresh.entries.size());
    fs::remove_all(dir);
}
