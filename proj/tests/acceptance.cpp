// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The checks themselves live in the library so the CLI `verify`
// verb runs the same code.

#include <algorithm>
#include <cstdio>
#include <iostream>

#include "schurq/verify.hpp"

int main() {
    schurq::verify::Options opts;  // defaults pin the documented sweep bounds
    auto results = schurq::verify::run_all(opts);
    bool all_pass = true;
    int index = 0;
    for (const auto& r : results) {
        ++index;
        all_pass = all_pass && r.pass;
        std::printf("%s  criterion %2d: %s  [%s]  (%.2f s)\n", r.pass ? "PASS" : "FAIL", index,
                    r.name.c_str(), r.detail.c_str(), r.seconds);
    }
    std::printf("%s: %d/%zu criteria passed\n", all_pass ? "OK" : "FAILURE",
                static_cast<int>(std::count_if(results.begin(), results.end(),
                                               [](const auto& r) { return r.pass; })),
                results.size());
    return all_pass ? 0 : 1;
}
