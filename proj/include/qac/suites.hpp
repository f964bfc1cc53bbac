#pragma once

#include <string>
#include <vector>

namespace qac {

struct PropertyResult {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    std::string first_failure;
};

struct SuiteResult {
    std::string suite;
    long long samples = 0;
    std::vector<PropertyResult> properties;

    long long total_failures() const {
        long long n = 0;
        for (const auto& p : properties) n += p.failures;
        return n;
    }
    bool pass() const { return total_failures() == 0; }
};

std::vector<std::string> suite_names();

// Deterministic given (samples, seed).  Throws std::invalid_argument on
// an unknown suite name.
SuiteResult run_suite(const std::string& name, long long samples, unsigned long long seed);

} // namespace qac
