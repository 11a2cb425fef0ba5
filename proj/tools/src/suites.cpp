#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>

#include "warpds/warpds.hpp"

namespace warpds::harness {

namespace {

using Reports = std::vector<CheckReport>;
using Meta = std::map<std::string, double>;

constexpr double kExact = 1e-12;
constexpr double kComposed = 1e-10;
constexpr double kOracle = 1e-3;
constexpr double kControl = 1e-2;
constexpr double kRoundoffFloor = 1e-13;

CheckReport lower(std::string name, double residual, double tol, Meta meta = {})
{
    return make_report(std::move(name), residual, tol, std::move(meta), CheckReport::Bound::lower);
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

Rng stream(const RunConfig& cfg, const std::string& suite) { return make_stream(cfg.seed(), "suite." + suite); }

Reports geometry(const RunConfig& cfg)
{
    double anti = 0.0;
    for (int mu = 0; mu < 5; ++mu)
        for (int nu = 0; nu < 5; ++nu) {
            const QuatMatrix2 ac = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
            const QuatMatrix2 want =
                mu == nu ? (2.0 * eta_diag(mu)) * QuatMatrix2::identity() : QuatMatrix2::zero();
            anti = std::max(anti, ac.max_abs_diff(want));
        }
    const Eigen::Matrix4cd omega = gamma_pseudoscalar().to_complex();
    const Eigen::Matrix4cd I = Eigen::Matrix4cd::Identity();
    const double i_omega = (cplx(0.0, 1.0) * omega - I).cwiseAbs().maxCoeff();
    const double minus_one = (omega + I).cwiseAbs().maxCoeff();

    const RegionSample pts = sample_hyperboloid(1000, cfg.seed());
    double eta_r = 0.0, roundtrip = 0.0;
    for (const auto& x : pts.points) {
        eta_r = std::max(eta_r, eta_identity_residual(x));
        roundtrip = std::max(roundtrip, (extract_point(embed_point(x)) - x).cwiseAbs().maxCoeff());
    }
    return {make_report("clifford_anticommutators", anti, 0.0, {{"pairs", 25}}),
            make_report("pseudoscalar_i_omega_is_one", i_omega, kExact),
            make_report("pseudoscalar_omega_is_minus_one", minus_one, kExact),
            make_report("eta_identity", eta_r, kExact, {{"points", 1000}}),
            make_report("embed_extract_roundtrip", roundtrip, kExact, {{"points", 1000}})};
}

SpinElement random_word(Rng& rng)
{
    std::uniform_int_distribution<int> len(1, 6), idx(0, 4);
    std::uniform_real_distribution<double> angle(-1.5, 1.5);
    SpinElement g(QuatMatrix2::identity());
    const int n = len(rng);
    for (int k = 0; k < n; ++k) {
        int a = idx(rng), b = idx(rng);
        while (b == a) b = idx(rng);
        g = g * rotor_cover(std::min(a, b), std::max(a, b), angle(rng));
    }
    return g;
}

Reports covering(const RunConfig& cfg)
{
    Rng rng = stream(cfg, "covering");
    double hom = 0.0, lorentz = 0.0;
    for (int i = 0; i < 100; ++i) {
        const SpinElement g = random_word(rng), h = random_word(rng);
        const Matrix5 pg = covering_hom(g), ph = covering_hom(h);
        hom = std::max(hom, max_abs(covering_hom(g * h) - pg * ph) / std::max(1.0, max_abs(pg * ph)));
        lorentz = std::max(lorentz, lorentz_residual(pg) / std::max(1.0, max_abs(pg) * max_abs(pg)));
    }
    const SpinElement one(QuatMatrix2::identity());
    const double pm = std::max(max_abs(covering_hom(one) - Matrix5::Identity()),
                               max_abs(covering_hom(-one) - Matrix5::Identity()));
    Reports out{make_report("homomorphism_random_words", hom, kComposed, {{"words", 100}}),
                make_report("image_is_lorentz", lorentz, kComposed, {{"words", 100}}),
                make_report("kernel_plus_minus_one", pm, 0.0)};
    for (double t : {0.1, 0.5, 1.0})
        out.push_back(make_report("boost_cover_maps_to_base_boost",
                                  max_abs(covering_hom(boost_cover(t)) - boost_base(t)), kComposed, {{"t", t}}));
    return out;
}

Reports lie(const RunConfig&)
{
    double bracket = 0.0;
    for (int mu = 0; mu < 5; ++mu)
        for (int nu = mu + 1; nu < 5; ++nu)
            for (int rho = 0; rho < 5; ++rho)
                for (int sigma = rho + 1; sigma < 5; ++sigma)
                    bracket = std::max(bracket, max_abs(lie_bracket(lie_basis(mu, nu), lie_basis(rho, sigma)) -
                                                        structure_constant_prediction(mu, nu, rho, sigma)));
    Reports out{make_report("structure_constants", bracket, 0.0, {{"brackets", 100}})};
    const std::vector<double> grid{-1.0, -0.5, 0.0, 0.5, 1.0};
    for (AbelianSubgroup s : {AbelianSubgroup::L1, AbelianSubgroup::L2, AbelianSubgroup::L3, AbelianSubgroup::L4}) {
        double r = 0.0;
        for (double t : grid)
            for (double u : grid) r = std::max(r, abelian_commutator_residual(s, t, u));
        out.push_back(make_report("abelian_flow_" + std::string(subgroup_name(s)), r, kComposed));
    }
    const ObstructionReport obs = reflection_obstruction_check(grid, grid);
    out.push_back(make_report("reflection_reverses_flow", obs.max_residual, kComposed, {{"grid", 25}}));
    out.push_back(lower("reflection_is_not_a_stabilizer", obs.max_flip_residual, kControl, {{"grid", 25}}));
    return out;
}

Reports wedges(const RunConfig& cfg)
{
    Rng rng = stream(cfg, "wedges");
    const Wedge ref = Wedge::reference();
    constexpr int pairs = 200;
    constexpr std::size_t samples = 100000;
    int witnesses = 0, inconclusive = 0;
    for (int i = 0; i < pairs; ++i) {
        const Wedge a = ref.transformed(random_lorentz(rng));
        Wedge b = ref.transformed(random_lorentz(rng));
        while (a.equals(b)) b = ref.transformed(random_lorentz(rng));
        const ProbeVerdict v = inclusion_rigidity_probe(a, b, samples, cfg.seed() + static_cast<std::uint64_t>(i));
        witnesses += v.outcome == ProbeOutcome::witness;
        inconclusive += v.outcome == ProbeOutcome::inconclusive;
    }
    const RegionSample pts = sample_hyperboloid(2000, cfg.seed() + 1);
    const Wedge prime = ref.complement();
    int mismatch = 0;
    for (const auto& x : pts.points) {
        const bool in = ref.contains(x);
        for (double t : {-0.8, 0.3, 1.2}) mismatch += ref.contains(boost_base(t) * x) != in;
        mismatch += prime.contains(reflection_base() * x) != in;
    }
    const double refl = ref.transformed(reflection_base()).equals(prime) ? 0.0 : 1.0;
    return {make_report("rigidity_probe_missing_witnesses", pairs - witnesses, 0.0,
                        {{"pairs", pairs},
                         {"samples", static_cast<double>(samples)},
                         {"inconclusive", inconclusive}}),
            make_report("membership_covariance_mismatches", mismatch, 0.0, {{"points", 2000}}),
            make_report("reflection_maps_to_complement", refl, 0.0)};
}

Reports car(const RunConfig& cfg, const OneParticleModel& m)
{
    Rng rng = stream(cfg, "car");
    std::normal_distribution<double> normal;
    const Eigen::Index n = m.doubled_dim();
    auto rand_vec = [&] {
        CVector f(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double re = normal(rng);
            f(i) = cplx(re, normal(rng));
        }
        return f;
    };
    const CMatrix one = CMatrix::Identity(m.fock()->dim(), m.fock()->dim());
    double rel = 0.0, star = 0.0, nrm = 0.0;
    for (int i = 0; i < 200; ++i) {
        const CVector f = rand_vec(), g = rand_vec();
        const FockOperator bf = field_B(m, f), bg = field_B(m, g);
        rel = std::max(rel, (anticommutator(bf, bg).matrix() - m.conjugation(f).dot(g) * one).cwiseAbs().maxCoeff());
        star = std::max(star, (bf.adjoint().matrix() - field_B(m, m.conjugation(f)).matrix()).cwiseAbs().maxCoeff());
        nrm = std::max(nrm, std::abs(bf.norm() - field_norm_formula(m, f)));
    }

    // all basis monomials up to length 6 when that is cheap, otherwise a seeded sample
    std::vector<CVector> basis;
    std::vector<CMatrix> bmat;
    for (Eigen::Index k = 0; k < n; ++k) {
        basis.push_back(CVector::Unit(n, k));
        bmat.push_back(field_B(m, basis.back()).matrix());
    }
    const QuasifreeOperatorS S(m, m.basis_projection());
    const CVector omega = vacuum(m);
    const bool exhaustive = std::pow(static_cast<double>(n), 6) <= 3e5;
    double qf = 0.0;
    long words = 0;
    auto check_word = [&](const std::vector<Eigen::Index>& idx) {
        CVector v = omega;
        std::vector<CVector> fs;
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) v = bmat[static_cast<std::size_t>(*it)] * v;
        for (Eigen::Index k : idx) fs.push_back(basis[static_cast<std::size_t>(k)]);
        qf = std::max(qf, std::abs(omega.dot(v) - quasifree_npoint(m, S, fs)));
        ++words;
    };
    if (exhaustive) {
        for (int len = 1; len <= 6; ++len) {
            std::vector<Eigen::Index> idx(static_cast<std::size_t>(len), 0);
            while (true) {
                check_word(idx);
                int k = len - 1;
                while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == n) idx[static_cast<std::size_t>(k--)] = 0;
                if (k < 0) break;
            }
        }
    } else {
        std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
        std::uniform_int_distribution<int> len(1, 6);
        for (int w = 0; w < 2000; ++w) {
            std::vector<Eigen::Index> idx(static_cast<std::size_t>(len(rng)));
            for (auto& k : idx) k = pick(rng);
            check_word(idx);
        }
    }
    return {make_report("car_relations", rel, kExact, {{"pairs", 200}}),
            make_report("field_adjoint", star, kExact, {{"vectors", 200}}),
            make_report("field_norm_formula", nrm, 1e-9, {{"vectors", 200}}),
            make_report("quasifree_vs_vacuum", qf, kComposed,
                        {{"monomials", static_cast<double>(words)}, {"exhaustive", exhaustive ? 1.0 : 0.0}})};
}

Reports deformation(const RunConfig& cfg, const OneParticleModel& m)
{
    LemmaSuiteOptions o;
    o.kappas = cfg.kappas;
    o.samples = 100;
    o.seed = cfg.seed();
    Reports out = deformation_lemma_checks(m, o);
    Rng rng = stream(cfg, "deformation");
    double spectral = 0.0, unit = 0.0;
    const FockOperator one = FockOperator::identity(m.fock());
    for (double kappa : cfg.kappas) {
        const DeformationContext ctx(m, kappa);
        const FockOperator F = random_operator(m.fock(), rng);
        spectral = std::max(spectral, distance(warp(ctx, F), warp_spectral(ctx, F)));
        unit = std::max(unit, distance(warp(ctx, one), one));
    }
    out.push_back(make_report("sector_formula_vs_spectral", spectral, kComposed));
    out.push_back(make_report("warp_of_unit", unit, kExact));
    return out;
}

Reports oracle(const RunConfig& cfg, const OneParticleModel& m)
{
    Rng rng = stream(cfg, "oracle");
    const FockOperator F = random_operator(m.fock(), rng);
    const std::vector<double> eps{0.1, 0.05, 0.025};
    Reports out;
    for (double kappa : cfg.kappas)
        for (auto [c, name] : {std::pair{Cutoff::gaussian, "gaussian"}, std::pair{Cutoff::compact, "compact"}}) {
            const auto sweep = oracle_sweep(DeformationContext(m, kappa), F, eps, c);
            int increases = 0;
            for (std::size_t i = 1; i < sweep.size(); ++i) {
                const double prev = sweep[i - 1].residual, next = sweep[i].residual;
                increases += !(next < prev || (prev < kRoundoffFloor && next < kRoundoffFloor));
            }
            const Meta meta{{"kappa", kappa},
                            {"residual_eps_0.1", sweep[0].residual},
                            {"residual_eps_0.05", sweep[1].residual},
                            {"residual_eps_0.025", sweep[2].residual}};
            out.push_back(make_report(std::string("oracle_") + name + "_monotone_violations", increases, 0.0, meta));
            out.push_back(make_report(std::string("oracle_") + name + "_eps_0.025", sweep[2].residual, kOracle, meta));
        }
    return out;
}

Reports locality(const RunConfig& cfg, const OneParticleModel& m)
{
    Reports out;
    for (double kappa : cfg.kappas) {
        TwistedLocalityOptions o;
        o.degree = 4;
        o.seed = cfg.seed();
        out.push_back(check_twisted_locality(m, kappa, o, kComposed));
    }
    return out;
}

Reports fixed_point(const RunConfig& cfg, const OneParticleModel& m)
{
    Rng rng = stream(cfg, "fixed_point");
    std::bernoulli_distribution coin(0.5);
    const CMatrix K = boost_generator(m).matrix();
    int disagree = 0, fixed = 0;
    for (int i = 0; i < 100; ++i) {
        CMatrix a = random_operator(m.fock(), rng).component(0).matrix();
        if (coin(rng))
            for (Eigen::Index c = 0; c < a.cols(); ++c)
                for (Eigen::Index r = 0; r < a.rows(); ++r)
                    if (K(r, r) != K(c, c)) a(r, c) = 0.0;
        const FixedPointResult res = fixed_point_residual(m, FockOperator(m.fock(), a));
        const double comm = res.max_charged_residual(), deriv = res.derivative_norm;
        const bool small = comm < 1e-8 && deriv < 1e-8, large = comm > 1e-6 && deriv > 1e-6;
        disagree += !(small || large);
        fixed += small;
    }
    Reports out{make_report("derivative_commutator_equivalence_failures", disagree, 0.0,
                            {{"operators", 100}, {"fixed", fixed}})};
    if (m.fock()->max_charge() >= 1) {
        const FockOperator E1 = charge_projector(m, 1);
        const FixedPointResult r = fixed_point_residual(m, E1);
        double moved = 0.0;
        for (double kappa : cfg.kappas) moved = std::max(moved, distance(warp(DeformationContext(m, kappa), E1), E1));
        const double scalar = distance(
            E1, cplx(E1.matrix().trace() / static_cast<double>(E1.dim())) * FockOperator::identity(m.fock()));
        out.push_back(make_report("E1_is_fixed", std::max({r.sector_residuals.at(1), r.derivative_norm, moved}),
                                  kExact));
        out.push_back(lower("E1_is_not_scalar", scalar, kControl));
    }
    return out;
}

Reports inequivalence(const RunConfig& cfg, const OneParticleModel& m)
{
    const double phi = *cfg.model.rotation_angle;
    double zero = 0.0;
    for (auto [k, p] : {std::pair{0.0, phi}, std::pair{1.0, 0.0}}) {
        const InequivalenceWitness w = inequivalence_witness(m, k, p);
        zero = std::max({zero, w.group_residual, w.fock_residual});
    }
    Reports out{make_report("trivial_when_kappa_phi_zero", zero, kExact, {{"phi", phi}})};
    for (double kappa : cfg.kappas) {
        if (kappa == 0.0 || phi == 0.0) continue;
        const InequivalenceWitness w = inequivalence_witness(m, kappa, phi);
        const Meta meta{{"kappa", kappa}, {"phi", phi}, {"group_residual", w.group_residual},
                        {"fock_residual", w.fock_residual}};
        out.push_back(lower("witness_group", w.group_residual, 1e-6, meta));
        out.push_back(lower("witness_fock", w.fock_residual, 1e-6, meta));
    }
    const InequivalenceWitness ref = inequivalence_witness(m, 1.0, std::numbers::pi / 4);
    out.push_back(lower("witness_reference_point", std::min(ref.group_residual, ref.fock_residual), 0.1,
                        {{"kappa", 1.0}, {"phi", std::numbers::pi / 4}}));
    return out;
}

Reports borchers(const RunConfig& cfg, const OneParticleModel& m)
{
    Reports out;
    for (double kappa : cfg.kappas) {
        for (auto& r : causal_borchers_axioms(m, kappa, 4, kComposed)) {
            r.metadata["kappa"] = kappa;
            out.push_back(std::move(r));
        }
        out.push_back(check_net_well_definedness(m, kappa, 4, kComposed));
    }
    return out;
}

Reports negative_controls(const RunConfig& cfg, const OneParticleModel& m)
{
    Reports out;
    for (double kappa : cfg.kappas) {
        if (kappa == 0.0) continue;
        TwistedLocalityOptions o;
        o.seed = cfg.seed();
        o.wrong_sign = true;
        const CheckReport wrong = check_twisted_locality(m, kappa, o, kComposed);
        out.push_back(lower("control_missing_kappa_flip", wrong.max_residual, kControl, wrong.metadata));
        o.wrong_sign = false;
        o.drop_reflection = true;
        const CheckReport same = check_twisted_locality(m, kappa, o, kComposed);
        out.push_back(lower("control_missing_reflection", same.max_residual, kControl, same.metadata));
    }
    return out;
}

bool needs_reflection(const std::string& s)
{
    return s == "deformation" || s == "locality" || s == "borchers" || s == "negative_controls";
}

}  // namespace

bool SuiteResult::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport& r) { return r.pass; });
}

std::vector<std::string> selected_suites(const RunConfig& cfg)
{
    if (cfg.suites.empty()) return known_suites();
    std::vector<std::string> out;
    for (const auto& s : known_suites())
        if (std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end()) out.push_back(s);
    return out;
}

void check_prerequisites(const RunConfig& cfg)
{
    const OneParticleModel m(cfg.model);
    for (const auto& s : selected_suites(cfg)) {
        if (needs_reflection(s) && !m.has_reflection())
            throw ConfigError("suite '" + s + "' needs model.reflection_pairs");
        if (s == "inequivalence" && (!cfg.model.rotation_angle || m.d_plus() < 1 || m.d_minus() < 1))
            throw ConfigError("suite 'inequivalence' needs model.rotation_angle and d_plus, d_minus >= 1");
    }
}

SuiteResult run_suite(const std::string& name, const RunConfig& cfg)
{
    const auto start = std::chrono::steady_clock::now();
    const OneParticleModel m(cfg.model);
    using Fn = std::function<Reports()>;
    const std::map<std::string, Fn> table{
        {"geometry", [&] { return geometry(cfg); }},
        {"covering", [&] { return covering(cfg); }},
        {"lie", [&] { return lie(cfg); }},
        {"wedges", [&] { return wedges(cfg); }},
        {"car", [&] { return car(cfg, m); }},
        {"deformation", [&] { return deformation(cfg, m); }},
        {"oracle", [&] { return oracle(cfg, m); }},
        {"locality", [&] { return locality(cfg, m); }},
        {"fixed_point", [&] { return fixed_point(cfg, m); }},
        {"inequivalence", [&] { return inequivalence(cfg, m); }},
        {"borchers", [&] { return borchers(cfg, m); }},
        {"negative_controls", [&] { return negative_controls(cfg, m); }},
    };
    const auto it = table.find(name);
    if (it == table.end()) throw ConfigError("unknown suite '" + name + "'");

    SuiteResult out{name, it->second(), 0.0};
    if (const auto ov = cfg.tolerances.find(name); ov != cfg.tolerances.end())
        for (auto& r : out.checks)
            if (r.bound == CheckReport::Bound::upper)
                r = make_report(r.name, r.max_residual, ov->second, r.metadata, r.bound);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace warpds::harness
