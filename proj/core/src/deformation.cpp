#include "warpds/deformation.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

namespace warpds {

namespace {

Eigen::VectorXd occupation_sums(const FockSpace& fs, const Eigen::VectorXd& omega)
{
    Eigen::VectorXd lambda = Eigen::VectorXd::Zero(fs.dim());
    for (Eigen::Index b = 0; b < fs.dim(); ++b)
        for (int j = 0; j < fs.modes(); ++j)
            if (b & (Eigen::Index{1} << j)) lambda(b) += omega(j);
    return lambda;
}

Eigen::VectorXcd phases(const Eigen::VectorXd& lambda, double t)
{
    Eigen::VectorXcd p(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) p(i) = std::polar(1.0, t * lambda(i));
    return p;
}

}  // namespace

BoostFlow BoostFlow::from_model(const OneParticleModel& model)
{
    BoostFlow f;
    f.space_ = model.fock();
    f.diagonal_ = true;
    f.lambda_ = occupation_sums(*f.space_, model.freqs());
    for (int n = f.space_->min_charge(); n <= f.space_->max_charge(); ++n)
        f.sector_lambda_.push_back(f.lambda_(f.space_->sector(n)));
    return f;
}

BoostFlow BoostFlow::from_mode_generator(const OneParticleModel& model, const CMatrix& h)
{
    const int D = model.modes(), dp = model.d_plus(), dm = model.d_minus();
    if (h.rows() != D || h.cols() != D) throw DomainError("BoostFlow: h must be D x D");
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw DomainError("BoostFlow: h must be Hermitian");
    if (dp > 0 && dm > 0 &&
        (h.topRightCorner(dp, dm).cwiseAbs().maxCoeff() > 1e-12 ||
         h.bottomLeftCorner(dm, dp).cwiseAbs().maxCoeff() > 1e-12))
        throw DomainError("BoostFlow: h must not mix particles and antiparticles");

    // diagonalize each charge type separately so eigenvectors never mix them
    CMatrix w = CMatrix::Zero(D, D);
    Eigen::VectorXd omega(D);
    auto diagonalize = [&](int off, int n) {
        if (n == 0) return;
        Eigen::SelfAdjointEigenSolver<CMatrix> es(h.block(off, off, n, n));
        w.block(off, off, n, n) = es.eigenvectors();
        omega.segment(off, n) = es.eigenvalues();
    };
    diagonalize(0, dp);
    diagonalize(dp, dm);

    BoostFlow f;
    f.space_ = model.fock();
    f.diagonal_ = false;
    f.lambda_ = occupation_sums(*f.space_, omega);
    f.v_ = second_quantize(model, w).matrix();
    for (int n = f.space_->min_charge(); n <= f.space_->max_charge(); ++n) {
        const auto& idx = f.space_->sector(n);
        f.sector_v_.push_back(f.v_(idx, idx));
        f.sector_lambda_.push_back(f.lambda_(idx));
    }
    return f;
}

CMatrix BoostFlow::eigenvectors() const
{
    if (diagonal_) return CMatrix::Identity(space_->dim(), space_->dim());
    return v_;
}

FockOperator BoostFlow::generator() const
{
    const CMatrix d = lambda_.cast<cplx>().asDiagonal();
    if (diagonal_) return {space_, d};
    return {space_, v_ * d * v_.adjoint()};
}

FockOperator BoostFlow::unitary(double t) const
{
    const CMatrix d = phases(lambda_, t).asDiagonal();
    if (diagonal_) return {space_, d};
    return {space_, v_ * d * v_.adjoint()};
}

CMatrix BoostFlow::sector_unitary(int n, double t) const
{
    const auto k = static_cast<std::size_t>(n - space_->min_charge());
    const CMatrix d = phases(sector_lambda_.at(k), t).asDiagonal();
    if (diagonal_) return d;
    return sector_v_[k] * d * sector_v_[k].adjoint();
}

FockOperator warp(const DeformationContext& ctx, const FockOperator& F)
{
    const FockSpace& fs = *F.space();
    const BoostFlow& flow = ctx.flow;
    const double kappa = ctx.kappa;
    CMatrix out = CMatrix::Zero(F.dim(), F.dim());
    for (int from = fs.min_charge(); from <= fs.max_charge(); ++from) {
        for (int to = fs.min_charge(); to <= fs.max_charge(); ++to) {
            const CMatrix blk = F.block(to, from);
            if (blk.size() == 0 || blk.cwiseAbs().maxCoeff() == 0.0) continue;
            CMatrix res;
            if (flow.diagonal()) {
                const auto& lam_to = flow.eigenvalues()(fs.sector(to));
                const auto& lam_from = flow.eigenvalues()(fs.sector(from));
                res = phases(lam_to, kappa * from).asDiagonal() * blk *
                      phases(lam_from, -kappa * to).asDiagonal();
            } else {
                res = flow.sector_unitary(to, kappa * from) * blk *
                      flow.sector_unitary(from, -kappa * to);
            }
            out(fs.sector(to), fs.sector(from)) = res;
        }
    }
    return {F.space(), std::move(out)};
}

namespace {

// Applies entry factor(a, b) to F in the joint eigenbasis of the flow and charge.
template <class Factor>
FockOperator in_eigenbasis(const DeformationContext& ctx, const FockOperator& F, Factor&& factor)
{
    const FockSpace& fs = *F.space();
    const CMatrix v = ctx.flow.eigenvectors();
    CMatrix g = ctx.flow.diagonal() ? F.matrix() : CMatrix(v.adjoint() * F.matrix() * v);
    const Eigen::VectorXd& lam = ctx.flow.eigenvalues();
    for (Eigen::Index b = 0; b < g.cols(); ++b)
        for (Eigen::Index a = 0; a < g.rows(); ++a)
            if (g(a, b) != cplx(0.0))
                g(a, b) *= factor(lam(a), fs.charge(a), lam(b), fs.charge(b));
    if (!ctx.flow.diagonal()) g = v * g * v.adjoint();
    return {F.space(), std::move(g)};
}

}  // namespace

FockOperator warp_spectral(const DeformationContext& ctx, const FockOperator& F)
{
    const double kappa = ctx.kappa;
    return in_eigenbasis(ctx, F, [kappa](double ka, int qa, double kb, int qb) {
        return std::polar(1.0, kappa * (qb * ka - qa * kb));
    });
}

double compact_window(double u)
{
    constexpr double flat = 3.0, edge = 6.0;
    const double x = std::abs(u);
    if (x <= flat) return 1.0;
    if (x >= edge) return 0.0;
    return 0.5 * (1.0 + std::cos(std::numbers::pi * (x - flat) / (edge - flat)));
}

double compact_window_fourier(double k)
{
    constexpr double a = 3.0, R = 6.0;
    constexpr double p = std::numbers::pi / (R - a);
    const double x = std::abs(k);
    if (x < 1e-6) return a + R;  // removable singularity at k = 0, error O(k^2)
    if (std::abs(x - p) < 1e-7)  // removable singularity at |k| = p
        return -p * p * (a * std::cos(p * a) + R * std::cos(p * R)) / (2.0 * p * p);
    return p * p * (std::sin(x * a) + std::sin(x * R)) / (x * (p * p - x * x));
}

cplx regularized_pair_integral(double a, double b, double eps, Cutoff cutoff)
{
    if (!(eps > 0.0)) throw DomainError("regularized_pair_integral: eps must be positive");
    if (cutoff == Cutoff::gaussian) {
        const double d = 1.0 + 4.0 * std::pow(eps, 4);
        return std::exp(cplx(-eps * eps * (a * a + b * b), a * b) / d) / std::sqrt(d);
    }
    // J = e^{iab}/(2 pi) int dk chi^(k) e^{i a eps k} chi(eps b + eps^2 k)
    using GL = boost::math::quadrature::gauss<double, 20>;
    const double e2 = eps * eps;
    auto k_of = [&](double u) { return (u - eps * b) / e2; };
    const double breaks[] = {k_of(-6.0), k_of(-3.0), k_of(3.0), k_of(6.0)};
    auto integrand = [&](double k) {
        return compact_window_fourier(k) * compact_window(eps * b + e2 * k) *
               std::polar(1.0, a * eps * k);
    };
    constexpr double panel = 1.5;
    cplx sum = 0.0;
    for (int s = 0; s < 3; ++s) {
        const double lo = breaks[s], hi = breaks[s + 1];
        const auto n = static_cast<long>(std::ceil((hi - lo) / panel));
        const double h = (hi - lo) / static_cast<double>(n);
        for (long i = 0; i < n; ++i)
            sum += GL::integrate(integrand, lo + static_cast<double>(i) * h,
                                 lo + static_cast<double>(i + 1) * h);
    }
    return std::polar(1.0, a * b) * sum / (2.0 * std::numbers::pi);
}

FockOperator warp_oscillatory(const DeformationContext& ctx, const FockOperator& F, double eps,
                              Cutoff cutoff)
{
    if (!(eps > 0.0)) throw DomainError("warp_oscillatory: eps must be positive");
    const double kappa = ctx.kappa;
    std::map<std::pair<double, double>, cplx> cache;
    auto pair_integral = [&](double a, double b) {
        auto [it, fresh] = cache.try_emplace({a, b});
        if (fresh) it->second = regularized_pair_integral(a, b, eps, cutoff);
        return it->second;
    };
    // boost pair: a = -kappa (q_a - q_b), b = K_b; gauge pair: a = kappa (K_a - K_b), b = q_b
    return in_eigenbasis(ctx, F, [&](double ka, int qa, double kb, int qb) {
        return pair_integral(-kappa * (qa - qb), kb) * pair_integral(kappa * (ka - kb), qb);
    });
}

FockOperator rieffel_product(const DeformationContext& ctx, const FockOperator& F,
                             const FockOperator& G)
{
    return warp(ctx.with_kappa(-ctx.kappa), warp(ctx, F) * warp(ctx, G));
}

double warp_inverse_check(const DeformationContext& ctx, const FockOperator& F)
{
    return distance(warp(ctx.with_kappa(-ctx.kappa), warp(ctx, F)), F);
}

BoostFlow pushed_flow(const OneParticleModel& model, const CMatrix& r)
{
    return BoostFlow::from_mode_generator(model, r * model.boost_generator_modes() * r.adjoint());
}

BoostFlow rotated_flow(const OneParticleModel& model, double phi)
{
    return pushed_flow(model, model.rotation_for_angle(phi));
}

std::pair<FockOperator, FockOperator> covariance_transform(const DeformationContext& ctx,
                                                           const FockOperator& F,
                                                           const Symmetry& g)
{
    auto conj = [](const FockOperator& X, const FockOperator& A) { return X * A * X.adjoint(); };
    const FockOperator deformed = warp(ctx, F);
    switch (g.kind) {
    case Symmetry::Kind::boost: {
        const FockOperator u = ctx.flow.unitary(g.parameter);
        return {conj(u, deformed), warp(ctx, conj(u, F))};
    }
    case Symmetry::Kind::gauge: {
        const FockOperator v = gauge_unitary(ctx.model, g.parameter);
        return {conj(v, deformed), warp(ctx, conj(v, F))};
    }
    case Symmetry::Kind::reflection: {
        if (!ctx.model.has_reflection()) throw ModelError("covariance_transform: model has no reflection");
        const FockOperator j = reflection_unitary(ctx.model);
        return {conj(j, deformed), warp(ctx.with_kappa(-ctx.kappa), conj(j, F))};
    }
    case Symmetry::Kind::rotation: {
        if (!ctx.model.has_rotation()) throw ModelError("covariance_transform: model has no rotation");
        if (!ctx.flow.diagonal())
            throw DomainError("covariance_transform: rotation needs the model's own boost flow");
        const FockOperator r =
            second_quantize(ctx.model, ctx.model.rotation_for_angle(g.parameter));
        const DeformationContext pushed(ctx.model, rotated_flow(ctx.model, g.parameter), ctx.kappa);
        return {conj(r, deformed), warp(pushed, conj(r, F))};
    }
    }
    throw DomainError("covariance_transform: unknown symmetry");
}

}  // namespace warpds
