#pragma once

// Invariant suites run by `lfc selftest` and by the test binaries.

#include <cstdint>
#include <string>
#include <vector>

namespace lfc {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;  // worst observed deviation or first failure
};

SuiteResult suite_weight_simplex(std::uint64_t seed);
SuiteResult suite_cdf_quantile_monotone(std::uint64_t seed);
SuiteResult suite_density_normalization(std::uint64_t seed);
SuiteResult suite_relative_belief_nonnegative(std::uint64_t seed);
SuiteResult suite_relative_belief_self(std::uint64_t seed);
SuiteResult suite_ar1_conditional_oracle(std::uint64_t seed);
SuiteResult suite_split_merge_roundtrip(std::uint64_t seed);
SuiteResult suite_cart_bruteforce(std::uint64_t seed);
SuiteResult suite_tree_membership(std::uint64_t seed);

std::vector<SuiteResult> run_selftest(std::uint64_t seed = 1);

}  // namespace lfc
