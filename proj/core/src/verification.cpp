#include "warpds/verification.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <numbers>

#include "warpds/spin_group.hpp"

namespace warpds {

CheckReport make_report(std::string name, double residual, double tolerance,
                        std::map<std::string, double> metadata, CheckReport::Bound bound)
{
    CheckReport r;
    r.name = std::move(name);
    r.max_residual = residual;
    r.tolerance = tolerance;
    r.bound = bound;
    r.metadata = std::move(metadata);
    r.pass = bound == CheckReport::Bound::upper ? residual <= tolerance : residual > tolerance;
    if (!std::isfinite(residual)) r.pass = false;
    return r;
}

// ------------------------------------------------------------------- spans

OperatorSpan::OperatorSpan(FockSpacePtr space, double rank_tol)
    : space_(std::move(space)), rank_tol_(rank_tol)
{
}

bool OperatorSpan::add(const CMatrix& x)
{
    const double scale = std::max(1.0, x.norm());
    CMatrix v = x;
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis_) v -= frobenius_inner(b, v) * b;
    const double n = v.norm();
    if (n <= rank_tol_ * scale) return false;
    basis_.push_back(v / n);
    return true;
}

double OperatorSpan::residual(const CMatrix& x) const
{
    CMatrix v = x;
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis_) v -= frobenius_inner(b, v) * b;
    return v.norm() / std::max(1.0, x.norm());
}

OperatorSpan generated_span(const FockSpacePtr& space, const std::vector<CMatrix>& generators,
                            int degree, double rank_tol)
{
    OperatorSpan span(space, rank_tol);
    const CMatrix one = CMatrix::Identity(space->dim(), space->dim());
    span.add(one);
    std::vector<CMatrix> frontier{one};
    for (int level = 1; level <= degree && !frontier.empty(); ++level) {
        std::vector<CMatrix> next;
        for (const auto& x : frontier)
            for (const auto& g : generators) {
                CMatrix y = x * g;
                if (span.add(y)) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return span;
}

double span_inclusion_residual(const OperatorSpan& a, const OperatorSpan& b)
{
    double r = 0.0;
    for (const auto& x : a.basis()) r = std::max(r, b.residual(x));
    return r;
}

// --------------------------------------------------------------------- net

namespace {

FockOperator conj_by(const FockOperator& x, const FockOperator& a) { return x * a * x.adjoint(); }

OperatorSpan map_span(const OperatorSpan& s, const std::function<FockOperator(const FockOperator&)>& f)
{
    return s.mapped([&](const CMatrix& m) { return f(FockOperator(s.space(), m)).matrix(); });
}

}  // namespace

NetAssignment build_net(const OneParticleModel& model, double kappa, int degree)
{
    NetAssignment net;
    net.kappa = kappa;
    net.degree = degree;
    const auto& fs = model.fock();
    const DeformationContext ctx(model, kappa);
    const DeformationContext reflected = ctx.with_kappa(-kappa);

    std::vector<CMatrix> gens;
    for (const auto& f : wedge_subalgebra_basis(model, WedgeTag::W0)) {
        net.generators[WedgeTag::W0].push_back(field_B(model, f));
        gens.push_back(net.generators[WedgeTag::W0].back().matrix());
    }
    const OperatorSpan w0 = generated_span(fs, gens, degree);
    net.undeformed.emplace(WedgeTag::W0, w0);
    net.deformed.emplace(WedgeTag::W0, map_span(w0, [&](const FockOperator& x) { return warp(ctx, x); }));

    if (model.has_reflection()) {
        const FockOperator j = reflection_unitary(model);
        for (const auto& f : wedge_subalgebra_basis(model, WedgeTag::W0_prime))
            net.generators[WedgeTag::W0_prime].push_back(field_B(model, f));
        net.undeformed.emplace(WedgeTag::W0_prime,
                               map_span(w0, [&](const FockOperator& x) { return conj_by(j, x); }));
        net.deformed.emplace(WedgeTag::W0_prime, map_span(w0, [&](const FockOperator& x) {
                                 return warp(reflected, conj_by(j, x));
                             }));
    }
    if (model.has_rotation()) {
        const FockOperator r = rotation_unitary(model);
        const DeformationContext pushed(model, pushed_flow(model, model.rotation()), kappa);
        for (const auto& f : wedge_subalgebra_basis(model, WedgeTag::rotated))
            net.generators[WedgeTag::rotated].push_back(field_B(model, f));
        net.undeformed.emplace(WedgeTag::rotated,
                               map_span(w0, [&](const FockOperator& x) { return conj_by(r, x); }));
        net.deformed.emplace(WedgeTag::rotated, map_span(w0, [&](const FockOperator& x) {
                                 return warp(pushed, conj_by(r, x));
                             }));
    }
    return net;
}

// --------------------------------------------------------- twisted locality

FockOperator even_part(const OneParticleModel& model, const FockOperator& F)
{
    const FockOperator y = grading_Y(model);
    return cplx(0.5) * (F + y * F * y);
}

FockOperator odd_part(const OneParticleModel& model, const FockOperator& F)
{
    const FockOperator y = grading_Y(model);
    return cplx(0.5) * (F - y * F * y);
}

FockOperator random_operator(const FockSpacePtr& space, Rng& rng)
{
    std::normal_distribution<double> normal;
    CMatrix m(space->dim(), space->dim());
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            const double re = normal(rng);
            m(r, c) = cplx(re, normal(rng));
        }
    return {space, m / operator_norm(m)};
}

FockOperator random_span_element(const OperatorSpan& span, Rng& rng)
{
    std::normal_distribution<double> normal;
    CMatrix m = CMatrix::Zero(span.space()->dim(), span.space()->dim());
    for (const auto& b : span.basis()) {
        const double re = normal(rng);
        m += cplx(re, normal(rng)) * b;
    }
    const double n = operator_norm(m);
    return {span.space(), n > 0.0 ? CMatrix(m / n) : m};
}

namespace {

double twisted_pair_residual(const OneParticleModel& model, const FockOperator& Z,
                             const FockOperator& F, const FockOperator& G)
{
    const double twisted = commutator(Z * F * Z.adjoint(), G).norm();
    const FockOperator fe = even_part(model, F), fo = F - fe;
    const FockOperator ge = even_part(model, G), go = G - ge;
    const double graded = std::max({commutator(fe, G).norm(), commutator(F, ge).norm(),
                                    anticommutator(fo, go).norm()});
    return std::max(twisted, graded);
}

}  // namespace

CheckReport check_twisted_locality(const OneParticleModel& model, double kappa,
                                   const TwistedLocalityOptions& opts, double tolerance)
{
    const auto& fs = model.fock();
    const DeformationContext ctx(model, kappa);
    const double other_kappa = opts.wrong_sign ? kappa : -kappa;
    const DeformationContext other = ctx.with_kappa(other_kappa);

    std::vector<CMatrix> gens;
    for (const auto& f : wedge_subalgebra_basis(model, WedgeTag::W0))
        gens.push_back(field_B(model, f).matrix());
    const OperatorSpan w0 = generated_span(fs, gens, opts.degree);

    std::optional<FockOperator> j;
    if (!opts.drop_reflection) j = reflection_unitary(model);

    const OperatorSpan left = map_span(w0, [&](const FockOperator& x) { return warp(ctx, x); });
    const OperatorSpan right = map_span(w0, [&](const FockOperator& x) {
        return warp(other, j ? conj_by(*j, x) : x);
    });

    const FockOperator Z = twist_Z(model);
    double worst = 0.0;
    for (const auto& a : left.basis())
        for (const auto& b : right.basis())
            worst = std::max(worst, twisted_pair_residual(model, Z, {fs, a}, {fs, b}));
    Rng rng = make_stream(opts.seed, "twisted_locality");
    for (int i = 0; i < opts.random_samples; ++i)
        worst = std::max(worst, twisted_pair_residual(model, Z, random_span_element(left, rng),
                                                      random_span_element(right, rng)));

    std::string name = "twisted_locality";
    if (opts.wrong_sign) name += "_wrong_sign";
    if (opts.drop_reflection) name += "_no_reflection";
    return make_report(std::move(name), worst, tolerance,
                       {{"kappa", kappa},
                        {"degree", opts.degree},
                        {"span_dim", static_cast<double>(left.size())},
                        {"seed", static_cast<double>(opts.seed)}});
}

// -------------------------------------------------------------- fixed point

double FixedPointResult::max_charged_residual() const
{
    double r = 0.0;
    for (auto [n, v] : sector_residuals)
        if (n != 0) r = std::max(r, v);
    return r;
}

FixedPointResult fixed_point_residual(const OneParticleModel& model, const FockOperator& A, double h)
{
    const FockOperator Q = charge_operator(model);
    if (commutator(Q, A).matrix().cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, A.norm()))
        throw DomainError("fixed_point_residual: operator is not gauge invariant");
    const auto& fs = *model.fock();
    const FockOperator K = boost_generator(model);

    FixedPointResult out;
    FockOperator analytic = FockOperator::zero(model.fock());
    for (int n = fs.min_charge(); n <= fs.max_charge(); ++n) {
        const FockOperator c = commutator(K, A * charge_projector(model, n));
        out.sector_residuals[n] = c.norm();
        analytic = analytic + cplx(0.0, n) * c;
    }
    out.analytic_derivative_norm = analytic.norm();

    const DeformationContext ctx(model, 0.0);
    auto central = [&](double step) {
        const FockOperator plus = warp(ctx.with_kappa(step), A);
        const FockOperator minus = warp(ctx.with_kappa(-step), A);
        return cplx(1.0 / (2.0 * step)) * (plus - minus);
    };
    const FockOperator d1 = central(h), d2 = central(0.5 * h);
    out.derivative_norm = (cplx(4.0 / 3.0) * d2 - cplx(1.0 / 3.0) * d1).norm();
    return out;
}

// ------------------------------------------------------------ inequivalence

InequivalenceWitness inequivalence_witness(const OneParticleModel& model, double kappa, double phi)
{
    if (!model.has_rotation()) throw ModelError("inequivalence_witness: model has no rotation");
    if (model.d_plus() < 1 || model.d_minus() < 1)
        throw ModelError("inequivalence_witness: needs a particle and an antiparticle mode");

    InequivalenceWitness w;
    const LorentzMatrix5 boost = boost_base(kappa);
    const LorentzMatrix5 rot = lorentz_exp(lie_basis(1, 2).matrix, phi);
    w.group_residual = operator_norm(Eigen::MatrixXd(boost * rot - rot * boost));

    const DeformationContext xi(model, kappa);
    const DeformationContext pushed(model, rotated_flow(model, phi), kappa);
    CVector f = CVector::Zero(model.modes());
    f(model.d_plus()) = 1.0;
    const FockOperator psi = spinor(model, f);
    const CVector state = creation(model, 0) * vacuum(model);
    w.fock_residual = ((warp(xi, psi) - warp(pushed, psi)) * state).norm();
    return w;
}

// ------------------------------------------------------------ Borchers axioms

std::vector<CheckReport> causal_borchers_axioms(const OneParticleModel& model, double kappa,
                                                int degree, double tolerance, bool drop_reflection)
{
    const NetAssignment net = build_net(model, kappa, degree);
    const OperatorSpan& w0 = net.deformed.at(WedgeTag::W0);
    const std::map<std::string, double> meta{{"kappa", kappa}, {"degree", degree}};

    double a = 0.0;
    for (double t : {0.3, -0.7, 1.1}) {
        const FockOperator u = boost_unitary(model, t);
        for (const auto& x : w0.basis())
            a = std::max(a, w0.residual(conj_by(u, {w0.space(), x}).matrix()));
    }
    double c = 0.0;
    for (double s : {0.4, -1.3, 2.9}) {
        const FockOperator v = gauge_unitary(model, s);
        for (const auto& x : w0.basis())
            c = std::max(c, w0.residual(conj_by(v, {w0.space(), x}).matrix()));
    }
    TwistedLocalityOptions opts;
    opts.degree = degree;
    opts.random_samples = 0;
    opts.drop_reflection = drop_reflection || !model.has_reflection();
    const CheckReport b = check_twisted_locality(model, kappa, opts, tolerance);

    return {make_report("borchers_a_boost_invariance", a, tolerance, meta),
            make_report("borchers_b_twisted_commutant", b.max_residual, tolerance, meta),
            make_report("borchers_c_gauge_invariance", c, tolerance, meta)};
}

CheckReport check_net_well_definedness(const OneParticleModel& model, double kappa, int degree,
                                       double tolerance)
{
    const NetAssignment net = build_net(model, kappa, degree);
    const OperatorSpan& w0 = net.deformed.at(WedgeTag::W0);
    double worst = 0.0;
    // g1 W0 = g2 W0 for g2 = g1 Lambda(t): both assignments must agree
    for (double t : {0.25, -1.4}) {
        const FockOperator u = boost_unitary(model, t);
        const OperatorSpan moved =
            map_span(w0, [&](const FockOperator& x) { return conj_by(u, x); });
        worst = std::max({worst, span_inclusion_residual(moved, w0), span_inclusion_residual(w0, moved),
                          std::abs(static_cast<double>(moved.size()) - static_cast<double>(w0.size()))});
    }
    return make_report("net_well_definedness", worst, tolerance, {{"kappa", kappa}, {"degree", degree}});
}

// ----------------------------------------------------------- lemma suite

std::vector<CheckReport> deformation_lemma_checks(const OneParticleModel& model,
                                                  const LemmaSuiteOptions& opts)
{
    const auto& fs = model.fock();
    Rng rng = make_stream(opts.seed, "lemmas");
    std::uniform_real_distribution<double> param(-3.0, 3.0);

    std::vector<CMatrix> gens;
    for (const auto& f : wedge_subalgebra_basis(model, WedgeTag::W0))
        gens.push_back(field_B(model, f).matrix());
    const OperatorSpan w0 = generated_span(fs, gens, 4);
    const FockOperator j = reflection_unitary(model);
    const OperatorSpan w0p = map_span(w0, [&](const FockOperator& x) { return conj_by(j, x); });
    const FockOperator Z = twist_Z(model);
    const CVector omega = vacuum(model);

    double a = 0, b = 0, c = 0, d = 0, e = 0, vac = 0, inv = 0, assoc = 0, zero = 0;
    for (int i = 0; i < opts.samples; ++i) {
        const double kappa = opts.kappas[static_cast<std::size_t>(i) % opts.kappas.size()];
        const DeformationContext ctx(model, kappa);
        const DeformationContext rev = ctx.with_kappa(-kappa);
        const FockOperator F = random_operator(fs, rng);
        const FockOperator G = random_operator(fs, rng);
        const FockOperator H = random_operator(fs, rng);
        const FockOperator wF = warp(ctx, F);

        a = std::max(a, distance(wF.adjoint(), warp(ctx, F.adjoint())));
        b = std::max(b, distance(wF * warp(ctx, G), warp(ctx, rieffel_product(ctx, F, G))));

        const FockOperator fe = even_part(model, random_span_element(w0, rng));
        const FockOperator gl = random_span_element(w0p, rng);
        c = std::max(c, commutator(warp(ctx, fe), warp(rev, gl)).norm());
        const FockOperator fl = random_span_element(w0, rng);
        d = std::max(d, commutator(Z * warp(ctx, fl) * Z.adjoint(), warp(rev, gl)).norm());

        const FockOperator V = gauge_unitary(model, param(rng));
        const FockOperator U = boost_unitary(model, param(rng));
        e = std::max({e, distance(conj_by(V, wF), warp(ctx, conj_by(V, F))),
                      distance(conj_by(U, wF), warp(ctx, conj_by(U, F)))});

        vac = std::max(vac, (wF * omega - F * omega).norm());
        inv = std::max(inv, warp_inverse_check(ctx, F));
        assoc = std::max(assoc, distance(rieffel_product(ctx, rieffel_product(ctx, F, G), H),
                                         rieffel_product(ctx, F, rieffel_product(ctx, G, H))));
        zero = std::max(zero, (warp(ctx.with_kappa(0.0), F).matrix() - F.matrix()).cwiseAbs().maxCoeff());
    }
    const std::map<std::string, double> meta{{"samples", opts.samples},
                                             {"seed", static_cast<double>(opts.seed)}};
    return {make_report("lemma_a_adjoint", a, 1e-10, meta),
            make_report("lemma_b_rieffel_homomorphism", b, 1e-10, meta),
            make_report("lemma_c_commutant", c, 1e-10, meta),
            make_report("lemma_d_twisted_commutant", d, 1e-10, meta),
            make_report("lemma_e_unitary_conjugation", e, 1e-10, meta),
            make_report("vacuum_invariance", vac, 1e-12, meta),
            make_report("warp_inverse", inv, 1e-12, meta),
            make_report("rieffel_associativity", assoc, 1e-10, meta),
            make_report("warp_kappa_zero_identity", zero, 0.0, meta)};
}

std::vector<OraclePoint> oracle_sweep(const DeformationContext& ctx, const FockOperator& F,
                                      const std::vector<double>& eps, Cutoff cutoff)
{
    const FockOperator exact = warp(ctx, F);
    std::vector<OraclePoint> out;
    for (double e : eps) out.push_back({e, distance(warp_oscillatory(ctx, F, e, cutoff), exact)});
    return out;
}

}  // namespace warpds
