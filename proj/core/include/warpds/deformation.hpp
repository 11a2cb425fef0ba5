#pragma once

#include <utility>
#include <vector>

#include "warpds/car_fock.hpp"

namespace warpds {

// Boost flow t -> exp(itK) on Fock space with K = V diag(lambda) V^*, V block
// diagonal in charge. The default flow of a model is diagonal (V = 1).
class BoostFlow {
public:
    static BoostFlow from_model(const OneParticleModel& model);
    // K = dGamma(h) for a Hermitian mode-space h that preserves charge type.
    static BoostFlow from_mode_generator(const OneParticleModel& model, const CMatrix& h);

    const FockSpacePtr& space() const { return space_; }
    bool diagonal() const { return diagonal_; }
    const Eigen::VectorXd& eigenvalues() const { return lambda_; }
    CMatrix eigenvectors() const;

    FockOperator generator() const;
    FockOperator unitary(double t) const;
    // exp(itK) restricted to the charge-n sector.
    CMatrix sector_unitary(int n, double t) const;

private:
    FockSpacePtr space_;
    bool diagonal_ = true;
    Eigen::VectorXd lambda_;
    CMatrix v_;                          // empty when diagonal_
    std::vector<CMatrix> sector_v_;      // V restricted to each sector
    std::vector<Eigen::VectorXd> sector_lambda_;
};

// theta = (0 1; -1 0) is implicit.
struct DeformationContext {
    DeformationContext(const OneParticleModel& m, double k)
        : model(m), flow(BoostFlow::from_model(m)), kappa(k) {}
    DeformationContext(const OneParticleModel& m, BoostFlow f, double k)
        : model(m), flow(std::move(f)), kappa(k) {}

    DeformationContext with_kappa(double k) const { return {model, flow, k}; }

    OneParticleModel model;
    BoostFlow flow;
    double kappa;
};

// sum_{n, n'} U(kappa n) E(n') F E(n) U(-kappa n')
FockOperator warp(const DeformationContext& ctx, const FockOperator& F);
// Same map evaluated entrywise in the joint (K, Q) eigenbasis:
// F_ab -> F_ab exp(i kappa (q_b K_a - q_a K_b)).
FockOperator warp_spectral(const DeformationContext& ctx, const FockOperator& F);

enum class Cutoff { gaussian, compact };

// Regularized warped convolution with chi(eps v, eps v'), evaluated matrix element
// by matrix element in the joint eigenbasis.
FockOperator warp_oscillatory(const DeformationContext& ctx, const FockOperator& F, double eps,
                              Cutoff cutoff = Cutoff::gaussian);

// (1/2pi) int du dw exp(-i u w + i a u + i b w) chi(eps u) chi(eps w)
cplx regularized_pair_integral(double a, double b, double eps, Cutoff cutoff);
// Flat-top raised-cosine window: 1 on |u| <= 3, cosine taper to 0 at |u| = 6.
double compact_window(double u);
// int exp(iku) compact_window(u) du
double compact_window_fourier(double k);

// warp_{-kappa}(warp(F) warp(G))
FockOperator rieffel_product(const DeformationContext& ctx, const FockOperator& F,
                             const FockOperator& G);
// |warp_{-kappa}(warp(F)) - F|
double warp_inverse_check(const DeformationContext& ctx, const FockOperator& F);

struct Symmetry {
    enum class Kind { boost, gauge, reflection, rotation } kind;
    double parameter = 0.0;  // t, s, unused, phi

    static Symmetry boost(double t) { return {Kind::boost, t}; }
    static Symmetry gauge(double s) { return {Kind::gauge, s}; }
    static Symmetry reflection() { return {Kind::reflection, 0.0}; }
    static Symmetry rotation(double phi) { return {Kind::rotation, phi}; }
};

// Both sides of alpha_g(F_{xi,kappa}) = alpha_g(F)_{g_* xi, kappa}; the reflection
// pushes the flow to its reverse, i.e. kappa -> -kappa.
std::pair<FockOperator, FockOperator> covariance_transform(const DeformationContext& ctx,
                                                           const FockOperator& F,
                                                           const Symmetry& g);

// Flow pushed forward by a mode unitary r: K -> Gamma(r) K Gamma(r)^* = dGamma(r k r^*).
BoostFlow pushed_flow(const OneParticleModel& model, const CMatrix& r);
// pushed_flow for the model's planar rotation at angle phi.
BoostFlow rotated_flow(const OneParticleModel& model, double phi);

}  // namespace warpds
