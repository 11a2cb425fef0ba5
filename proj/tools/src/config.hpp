#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "warpds/car_fock.hpp"

namespace warpds::harness {

// Invalid configuration or command line; the CLI maps it to exit status 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Suite names in canonical execution order.
const std::vector<std::string>& known_suites();

struct RunConfig {
    ModelSpec model;
    std::vector<double> kappas{-1.0, -0.5, -0.1, 0.1, 0.5, 1.0};
    std::map<std::string, double> tolerances;  // suite -> upper-bound tolerance override
    std::vector<std::string> suites;           // empty: all, in canonical order
    std::string output_dir = "warpds_out";
    std::string format = "json";

    std::uint64_t seed() const { return model.seed; }
    double tolerance(const std::string& suite, double fallback) const;
};

RunConfig default_config();
// Throws ConfigError with a path-qualified message on any violation.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);
nlohmann::json to_json(const RunConfig& c);

// Checks shared by the file parser and command-line overrides.
void validate(RunConfig& c);

}  // namespace warpds::harness
