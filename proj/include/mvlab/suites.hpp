#pragma once

// Named invariant suites, each comparing two independent routes exactly.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mvlab {

struct SuiteCase {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteCase> cases;
    std::string summary;
    bool pass = false;
};

// table1, paths, funceq, closed, lambda, iz, upath.
const std::vector<std::string_view>& suite_names();

// gmax overrides the suite's default range (paths 15, funceq 4, lambda/iz/upath 20,
// closed 10 for the genus ODE); table1 ignores it.
// Throws mvlab::domain_error for an unknown suite.
SuiteResult run_suite(std::string_view name, std::optional<int> gmax = std::nullopt);

} // namespace mvlab
