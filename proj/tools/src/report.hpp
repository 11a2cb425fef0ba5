#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "suites.hpp"

namespace warpds::harness {

// Deterministic payload: no timings, no host data.
nlohmann::json report_json(const RunConfig& cfg, const std::vector<SuiteResult>& results);
nlohmann::json timings_json(const std::vector<SuiteResult>& results);

// Columns: suite, check, kappa, residual, tolerance, bound, pass.
void write_csv(std::ostream& out, const std::vector<SuiteResult>& results);
// Human-readable table of a report payload (as produced by report_json).
void render_table(std::ostream& out, const nlohmann::json& report);

nlohmann::json complex_pair(cplx z);
nlohmann::json complex_matrix(const CMatrix& m);  // rows of [re, im] pairs
nlohmann::json real_matrix(const Eigen::MatrixXd& m);

}  // namespace warpds::harness
