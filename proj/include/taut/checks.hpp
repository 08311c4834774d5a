#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace taut {

struct CheckResult {
    std::string suite;
    std::string name;
    std::string detail;
    bool ok = false;
};

struct CheckOptions {
    int genus_min = 2;
    int genus_max = 8;
    std::uint64_t seed = 1;
    int max_genus = 12;          // hard safety bound
    std::string golden_dir;      // empty: compiled-in default
};

// Known suites: operators, fourier, ideal, tables, sl2, hurwitz, all.
bool suite_known(const std::string& suite);
std::vector<std::string> suite_names();

// Runs one suite (or "all") deterministically for the given options. Each
// result line names the identity it verified. Unknown suites throw.
std::vector<CheckResult> run_suite(const std::string& suite, const CheckOptions& opts);

std::string default_golden_dir();

}  // namespace taut
