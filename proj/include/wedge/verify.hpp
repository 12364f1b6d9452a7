#pragma once

#include <optional>
#include <string>
#include <vector>

namespace wedge {

struct SuiteResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    int checks = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

std::vector<std::string> verify_suite_names();

// Runs the named suites (all when empty). A tolerance override replaces the
// per-suite default everywhere.
std::vector<SuiteResult> run_verify(const std::vector<std::string>& suites, std::optional<double> tol_override);

}  // namespace wedge
