#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "typecount/budget.hpp"

namespace typecount {

// The verification suites the CLI `verify` subcommand and the acceptance
// binary both run.  Each suite checks one property of the build at pinned
// grids and tolerances and reports a single pass/fail with detail text.
struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteSpec {
    std::string name;
    std::string summary;
};

std::vector<SuiteSpec> verify_suites();

// run one suite by name; throws std::invalid_argument for unknown names
SuiteResult run_suite(const std::string& name, std::uint64_t budget = default_budget());

// run all suites (or a selection), in registry order
std::vector<SuiteResult> run_all_suites(std::uint64_t budget = default_budget());

} // namespace typecount
