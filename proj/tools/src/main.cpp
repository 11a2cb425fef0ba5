#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>

#include "CLI11.hpp"
#include "config.hpp"
#include "report.hpp"
#include "suites.hpp"
#include "warpds/warpds.hpp"

using namespace warpds;
using namespace warpds::harness;
using nlohmann::json;

namespace {

// Options shared by the model-based subcommands.
struct Common {
    std::string config;
    std::optional<std::uint64_t> seed;

    void add(CLI::App* app)
    {
        app->add_option("--config", config, "JSON run configuration")->check(CLI::ExistingFile);
        app->add_option("--seed", seed, "override model.seed");
    }

    RunConfig load() const
    {
        RunConfig c = config.empty() ? default_config() : load_config(config);
        if (seed) c.model.seed = *seed;
        validate(c);
        return c;
    }
};

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

json quaternion_matrix(const QuatMatrix2& q)
{
    json rows = json::array();
    for (int r = 0; r < 2; ++r) {
        json row = json::array();
        for (int c = 0; c < 2; ++c) row.push_back({q(r, c).w, q(r, c).x, q(r, c).y, q(r, c).z});
        rows.push_back(row);
    }
    return rows;
}

FockOperator named_generator(const OneParticleModel& m, const std::string& name, std::uint64_t seed)
{
    std::smatch g;
    const auto index = [&](int bound) {
        const int j = std::stoi(g[1].str());
        if (j < 0 || j >= bound) throw ConfigError("generator '" + name + "': index out of range");
        return j;
    };
    if (std::regex_match(name, g, std::regex(R"(c(\d+))"))) return annihilation(m, index(m.modes()));
    if (std::regex_match(name, g, std::regex(R"(cdag(\d+))"))) return creation(m, index(m.modes()));
    if (std::regex_match(name, g, std::regex(R"(B(\d+))")))
        return field_B(m, CVector::Unit(m.doubled_dim(), index(static_cast<int>(m.doubled_dim()))));
    if (std::regex_match(name, g, std::regex(R"(E(-?\d+))"))) {
        const int n = std::stoi(g[1].str());
        if (n < m.fock()->min_charge() || n > m.fock()->max_charge())
            throw ConfigError("generator '" + name + "': no such charge sector");
        return charge_projector(m, n);
    }
    if (name == "Q") return charge_operator(m);
    if (name == "N") return number_operator(m);
    if (name == "K") return boost_generator(m);
    if (name == "Y") return grading_Y(m);
    if (name == "Z") return twist_Z(m);
    if (name == "random") {
        Rng rng = make_stream(seed, "cli.random_operator");
        return random_operator(m.fock(), rng);
    }
    throw ConfigError("unknown generator '" + name +
                      "' (expected c<j>, cdag<j>, B<k>, E<n>, Q, N, K, Y, Z or random)");
}

Cutoff parse_cutoff(const std::string& s)
{
    if (s == "gaussian") return Cutoff::gaussian;
    if (s == "compact") return Cutoff::compact;
    throw ConfigError("unknown cutoff '" + s + "'");
}

int run_verify(Common& common, const std::vector<std::string>& suites, const std::vector<double>& kappas,
               const std::string& out, const std::string& format)
{
    RunConfig cfg = common.load();
    if (!suites.empty()) cfg.suites = suites;
    if (!kappas.empty()) cfg.kappas = kappas;
    if (!out.empty()) cfg.output_dir = out;
    if (!format.empty()) cfg.format = format;
    validate(cfg);
    check_prerequisites(cfg);

    std::vector<SuiteResult> results;
    for (const auto& s : selected_suites(cfg)) {
        results.push_back(run_suite(s, cfg));
        std::cerr << "[warpds] " << s << ": " << (results.back().pass() ? "pass" : "FAIL") << '\n';
    }

    const std::filesystem::path dir(cfg.output_dir);
    std::filesystem::create_directories(dir);
    const json report = report_json(cfg, results);
    std::ofstream(dir / "report.json") << report.dump(2) << '\n';
    std::ofstream(dir / "timings.json") << timings_json(results).dump(2) << '\n';
    if (cfg.format == "csv") {
        std::ofstream csv(dir / "report.csv");
        write_csv(csv, results);
    }
    render_table(std::cout, report);
    return report["summary"]["pass"].get<bool>() ? 0 : 1;
}

int run_group(const std::vector<double>& ts)
{
    json boosts = json::array();
    for (double t : ts) {
        const SpinElement l = boost_cover(t);
        const Matrix5 pi = covering_hom(l), base = boost_base(t);
        boosts.push_back({{"t", t},
                          {"lambda", quaternion_matrix(l.matrix())},
                          {"pi_lambda", real_matrix(pi)},
                          {"Lambda", real_matrix(base)},
                          {"residual", (pi - base).cwiseAbs().maxCoeff()}});
    }
    double bracket = 0.0;
    for (int mu = 0; mu < 5; ++mu)
        for (int nu = mu + 1; nu < 5; ++nu)
            for (int rho = 0; rho < 5; ++rho)
                for (int sigma = rho + 1; sigma < 5; ++sigma)
                    bracket = std::max(bracket, (lie_bracket(lie_basis(mu, nu), lie_basis(rho, sigma)) -
                                                 structure_constant_prediction(mu, nu, rho, sigma))
                                                    .cwiseAbs()
                                                    .maxCoeff());
    json subgroups = json::array();
    const std::vector<double> grid{-1.0, -0.5, 0.0, 0.5, 1.0};
    for (AbelianSubgroup s : {AbelianSubgroup::L1, AbelianSubgroup::L2, AbelianSubgroup::L3, AbelianSubgroup::L4}) {
        double r = 0.0;
        for (double t : grid)
            for (double u : grid) r = std::max(r, abelian_commutator_residual(s, t, u));
        const auto gens = subgroup_generators(s);
        subgroups.push_back({{"name", subgroup_name(s)},
                             {"generators", {real_matrix(gens[0]), real_matrix(gens[1])}},
                             {"commutator_residual", r}});
    }
    const ObstructionReport obs = reflection_obstruction_check(grid, grid);
    print({{"boosts", boosts},
           {"structure_constants_residual", bracket},
           {"subgroups", subgroups},
           {"reflection_obstruction",
            {{"max_residual", obs.max_residual}, {"max_flip_residual", obs.max_flip_residual}}}});
    return 0;
}

int run_wedges(Common& common, int pairs, std::size_t samples)
{
    const RunConfig cfg = common.load();
    if (pairs < 1 || samples < 1) throw ConfigError("--pairs and --samples must be positive");
    Rng rng = make_stream(cfg.seed(), "cli.wedges");
    const Wedge ref = Wedge::reference();
    json out = json::array();
    for (int i = 0; i < pairs; ++i) {
        const Wedge a = ref.transformed(random_lorentz(rng)), b = ref.transformed(random_lorentz(rng));
        const ProbeVerdict v = inclusion_rigidity_probe(a, b, samples, cfg.seed() + static_cast<std::uint64_t>(i));
        json entry{{"pair", i},
                   {"outcome", v.outcome == ProbeOutcome::witness ? "witness"
                               : v.outcome == ProbeOutcome::equal ? "equal"
                                                                   : "inconclusive"},
                   {"trials", v.trials}};
        if (v.witness) {
            entry["witness"] = std::vector<double>(v.witness->data(), v.witness->data() + 5);
            entry["depth_in_first"] = a.depth(*v.witness);
            entry["depth_in_second"] = b.depth(*v.witness);
        } else {
            entry["witness"] = nullptr;
        }
        out.push_back(entry);
    }
    print({{"seed", cfg.seed()}, {"samples", samples}, {"probes", out}});
    return 0;
}

int run_deform(Common& common, const std::string& generator, double kappa, const std::string& cutoff, double eps)
{
    const RunConfig cfg = common.load();
    const OneParticleModel m(cfg.model);
    const FockOperator F = named_generator(m, generator, cfg.seed());
    const DeformationContext ctx(m, kappa);
    const FockOperator W = cutoff == "exact" ? warp(ctx, F) : warp_oscillatory(ctx, F, eps, parse_cutoff(cutoff));
    json j{{"generator", generator},
           {"kappa", kappa},
           {"cutoff", cutoff},
           {"dim", W.dim()},
           {"shifts", W.shifts()},
           {"distance_from_undeformed", distance(W, F)},
           {"matrix", complex_matrix(W.matrix())}};
    if (cutoff != "exact") j["eps"] = eps;
    print(j);
    return 0;
}

int run_oracle(Common& common, const std::string& generator, double kappa, const std::vector<double>& eps,
               const std::string& cutoff, const std::string& format)
{
    const RunConfig cfg = common.load();
    const OneParticleModel m(cfg.model);
    const FockOperator F = named_generator(m, generator, cfg.seed());
    std::vector<std::pair<std::string, Cutoff>> cutoffs;
    if (cutoff == "both" || cutoff == "gaussian") cutoffs.emplace_back("gaussian", Cutoff::gaussian);
    if (cutoff == "both" || cutoff == "compact") cutoffs.emplace_back("compact", Cutoff::compact);
    if (cutoffs.empty()) throw ConfigError("unknown cutoff '" + cutoff + "'");
    for (double e : eps)
        if (!(e > 0.0)) throw ConfigError("--eps values must be positive");

    json sweeps = json::array();
    if (format == "csv") std::cout << "cutoff,kappa,eps,residual\n";
    for (const auto& [name, c] : cutoffs) {
        const auto sweep = oracle_sweep(DeformationContext(m, kappa), F, eps, c);
        json pts = json::array();
        for (const auto& p : sweep) {
            pts.push_back({{"eps", p.eps}, {"residual", p.residual}});
            if (format == "csv") std::cout << name << ',' << kappa << ',' << p.eps << ',' << p.residual << '\n';
        }
        sweeps.push_back({{"cutoff", name}, {"points", pts}});
    }
    if (format != "csv") print({{"generator", generator}, {"kappa", kappa}, {"sweeps", sweeps}});
    return 0;
}

int run_report(const std::string& in)
{
    std::ifstream f(in);
    if (!f) throw ConfigError("cannot open report '" + in + "'");
    json j;
    try {
        f >> j;
        render_table(std::cout, j);
    } catch (const json::exception& e) {
        throw ConfigError("'" + in + "' is not a warpds report: " + e.what());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"warpds: warped-convolution deformation workbench"};
    app.require_subcommand(1);
    app.set_version_flag("--version", WARPDS_VERSION);

    Common verify_common, wedges_common, deform_common, oracle_common;

    auto* verify = app.add_subcommand("verify", "run verification suites and write reports");
    verify_common.add(verify);
    std::vector<std::string> suites;
    std::vector<double> kappas;
    std::string out, format;
    verify->add_option("--suite", suites, "suite(s) to run")->delimiter(',');
    verify->add_option("--kappa", kappas, "deformation parameters")->delimiter(',');
    verify->add_option("--out", out, "output directory");
    verify->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));

    auto* group = app.add_subcommand("group", "covering map and Lie algebra computations");
    std::vector<double> ts{0.5};
    group->add_option("--t", ts, "boost parameters")->delimiter(',');

    auto* wedge_cmd = app.add_subcommand("wedges", "wedge inclusion rigidity probes");
    wedges_common.add(wedge_cmd);
    int pairs = 10;
    std::size_t samples = 100000;
    wedge_cmd->add_option("--pairs", pairs, "number of random wedge pairs");
    wedge_cmd->add_option("--samples", samples, "samples per probe");

    auto* deform = app.add_subcommand("deform", "warp a single named operator");
    deform_common.add(deform);
    std::string generator = "c0", cutoff = "exact";
    double kappa = 0.5, eps = 0.025;
    deform->add_option("--generator", generator, "c<j>, cdag<j>, B<k>, E<n>, Q, N, K, Y, Z or random");
    deform->add_option("--kappa", kappa, "deformation parameter");
    deform->add_option("--cutoff", cutoff, "exact, gaussian or compact")
        ->check(CLI::IsMember({"exact", "gaussian", "compact"}));
    deform->add_option("--eps", eps, "regularization for the oscillatory cutoffs");

    auto* oracle = app.add_subcommand("oracle", "oscillatory integral against the closed form");
    oracle_common.add(oracle);
    std::string oracle_generator = "random", oracle_cutoff = "both", oracle_format = "json";
    double oracle_kappa = 0.5;
    std::vector<double> eps_list{0.1, 0.05, 0.025};
    oracle->add_option("--generator", oracle_generator, "operator to deform");
    oracle->add_option("--kappa", oracle_kappa, "deformation parameter");
    oracle->add_option("--eps", eps_list, "regularization sweep")->delimiter(',');
    oracle->add_option("--cutoff", oracle_cutoff, "gaussian, compact or both")
        ->check(CLI::IsMember({"gaussian", "compact", "both"}));
    oracle->add_option("--format", oracle_format, "output format")->check(CLI::IsMember({"json", "csv"}));

    auto* report = app.add_subcommand("report", "render a report.json as a table");
    std::string report_in;
    report->add_option("report", report_in, "path to report.json")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) return run_verify(verify_common, suites, kappas, out, format);
        if (*group) return run_group(ts);
        if (*wedge_cmd) return run_wedges(wedges_common, pairs, samples);
        if (*deform) return run_deform(deform_common, generator, kappa, cutoff, eps);
        if (*oracle) return run_oracle(oracle_common, oracle_generator, oracle_kappa, eps_list, oracle_cutoff,
                                       oracle_format);
        if (*report) return run_report(report_in);
    } catch (const ConfigError& e) {
        std::cerr << "warpds: config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {  // ModelError, DomainError
        std::cerr << "warpds: invalid input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "warpds: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
