#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>

#ifndef WARPDS_VERSION
#define WARPDS_VERSION "unknown"
#endif

namespace warpds::harness {

using nlohmann::json;

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json check_json(const CheckReport& r)
{
    json meta = json::object();
    for (const auto& [k, v] : r.metadata) meta[k] = number_or_null(v);
    return {{"name", r.name},
            {"max_residual", number_or_null(r.max_residual)},
            {"tolerance", r.tolerance},
            {"bound", r.bound == CheckReport::Bound::upper ? "upper" : "lower"},
            {"pass", r.pass},
            {"metadata", meta}};
}

std::string csv_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

json complex_pair(cplx z) { return json::array({z.real(), z.imag()}); }

json complex_matrix(const CMatrix& m)
{
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_pair(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json real_matrix(const Eigen::MatrixXd& m)
{
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

json report_json(const RunConfig& cfg, const std::vector<SuiteResult>& results)
{
    json suites = json::array();
    json substreams = json::object();
    int checks = 0, failed = 0;
    for (const auto& s : results) {
        json list = json::array();
        for (const auto& r : s.checks) {
            list.push_back(check_json(r));
            ++checks;
            failed += !r.pass;
        }
        suites.push_back({{"name", s.name}, {"pass", s.pass()}, {"checks", list}});
        substreams[s.name] = "suite." + s.name;
    }
    return {{"artifact", {{"name", "warpds"}, {"version", WARPDS_VERSION}}},
            {"config", to_json(cfg)},
            {"seeds", {{"base", cfg.seed()}, {"substreams", substreams}}},
            {"suites", suites},
            {"summary", {{"checks", checks}, {"failed", failed}, {"pass", failed == 0}}}};
}

json timings_json(const std::vector<SuiteResult>& results)
{
    json t = json::object();
    double total = 0.0;
    for (const auto& s : results) {
        t[s.name] = s.seconds;
        total += s.seconds;
    }
    return {{"suites_seconds", t}, {"total_seconds", total}};
}

void write_csv(std::ostream& out, const std::vector<SuiteResult>& results)
{
    out << "suite,check,kappa,residual,tolerance,bound,pass\n";
    for (const auto& s : results)
        for (const auto& r : s.checks) {
            const auto k = r.metadata.find("kappa");
            out << s.name << ',' << r.name << ',' << (k == r.metadata.end() ? "" : csv_number(k->second)) << ','
                << csv_number(r.max_residual) << ',' << csv_number(r.tolerance) << ','
                << (r.bound == CheckReport::Bound::upper ? "upper" : "lower") << ',' << (r.pass ? "true" : "false")
                << '\n';
        }
}

void render_table(std::ostream& out, const json& report)
{
    const auto fmt = [](const json& v) {
        if (v.is_null()) return std::string("nan");
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", v.get<double>());
        return std::string(buf);
    };
    out << std::left << std::setw(18) << "suite" << std::setw(44) << "check" << std::setw(9) << "kappa"
        << std::setw(12) << "residual" << std::setw(14) << "tolerance" << "result\n";
    for (const auto& s : report.at("suites"))
        for (const auto& c : s.at("checks")) {
            const json& meta = c.at("metadata");
            std::string kappa = "";
            if (meta.contains("kappa") && meta["kappa"].is_number()) {
                char buf[16];
                std::snprintf(buf, sizeof buf, "%g", meta["kappa"].get<double>());
                kappa = buf;
            }
            const std::string tol = (c.at("bound") == "lower" ? "> " : "<= ") + fmt(c.at("tolerance"));
            out << std::setw(18) << s.at("name").get<std::string>() << std::setw(44)
                << c.at("name").get<std::string>() << std::setw(9) << kappa << std::setw(12)
                << fmt(c.at("max_residual")) << std::setw(14) << tol << (c.at("pass").get<bool>() ? "PASS" : "FAIL")
                << '\n';
        }
    const json& sum = report.at("summary");
    out << sum.at("failed").get<int>() << " of " << sum.at("checks").get<int>() << " checks failed\n";
}

}  // namespace warpds::harness
