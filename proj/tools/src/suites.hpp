#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "warpds/verification.hpp"

namespace warpds::harness {

struct SuiteResult {
    std::string name;
    std::vector<CheckReport> checks;
    double seconds = 0.0;

    bool pass() const;
};

// Throws ConfigError if the model lacks what a selected suite needs.
void check_prerequisites(const RunConfig& cfg);

// Runs one suite and applies the config's tolerance override to its upper-bound checks.
SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

// Requested suites (or all) in canonical order.
std::vector<std::string> selected_suites(const RunConfig& cfg);

}  // namespace warpds::harness
