#pragma once

#include <string>
#include <vector>

namespace conformal::cli {

struct VerifyCaps {
    unsigned max_n = 6;
    unsigned max_m = 8;
    unsigned threads = 1;
};

struct CheckFailure {
    std::string where;  // minimal reproducing parameters
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::size_t checks = 0;
    std::vector<CheckFailure> failures;
    std::vector<std::vector<std::string>> table;  // only the groups suite fills this
    bool pass() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();  // without "all"

// Throws ResourceCeilingError through when the oracle gives up.
SuiteReport run_suite(const std::string& suite, const VerifyCaps& caps);

}  // namespace conformal::cli
