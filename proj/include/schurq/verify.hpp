#pragma once

#include <string>
#include <vector>

namespace schurq {
namespace verify {

struct Options {
    int max_lambda1 = 8;   // chern/modularity/euler sweeps (>= 4)
    int dichotomy_max = 10;
    int table_m_max = 6;   // self-ext table families
    int kset_m_max = 8;    // generator-list conformance
    int ranksum_m_max = 12;
    int kbc_max = 5;       // b + c bound
    int ext1_factor_max = 6;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

std::vector<CheckResult> run_all(const Options& opts);

}  // namespace verify
}  // namespace schurq
