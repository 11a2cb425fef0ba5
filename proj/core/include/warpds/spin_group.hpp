#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "warpds/geometry.hpp"

namespace warpds {

// Element of Sp(1,1): g^* gamma_0 g = gamma_0.
class SpinElement {
public:
    // Throws DomainError if m violates the Sp(1,1) condition beyond tol.
    explicit SpinElement(const QuatMatrix2& m, double tol = 1e-10);

    const QuatMatrix2& matrix() const { return m_; }
    // g^-1 = gamma_0 g^* gamma_0
    SpinElement inverse() const;
    double membership_residual() const;

    friend SpinElement operator*(const SpinElement& a, const SpinElement& b);
    friend SpinElement operator-(const SpinElement& a);

private:
    struct Trusted {};
    SpinElement(const QuatMatrix2& m, Trusted) : m_(m) {}
    QuatMatrix2 m_;
};

using LorentzMatrix5 = Matrix5;

double lorentz_residual(const LorentzMatrix5& L);  // |L^T eta L - eta|_max
// Tolerances scale with the squared magnitude of the largest entry.
bool is_proper_orthochronous(const LorentzMatrix5& L, double tol = 1e-10);
LorentzMatrix5 lorentz_inverse(const LorentzMatrix5& L);  // eta L^T eta

// Lambda^mu_nu = eta^{mu mu} Tr(gamma_mu g gamma_nu g^-1) / 4.
LorentzMatrix5 covering_hom(const SpinElement& g);

// lambda_W0(t): cosh(pi t), sinh(pi t) entries.
SpinElement boost_cover(double t);
// Lambda_W0(t): cosh(2 pi t), sinh(2 pi t) block in the (x0, x1) plane.
LorentzMatrix5 boost_base(double t);
// j_W0 = diag(1,-1,-1,-1,-1) and its lift diag(1,-1) = gamma_0.
LorentzMatrix5 reflection_base();
SpinElement reflection_cover();
// exp(theta/2 gamma_a gamma_b), a < b; spatial pairs rotate, pairs (0,a) boost.
SpinElement rotor_cover(int a, int b, double theta);

// M_{mu nu} = (e_nu e_mu^T - e_mu e_nu^T) eta.
struct LieBasisElement {
    int mu = 0, nu = 0;
    Matrix5 matrix = Matrix5::Zero();
};

LieBasisElement lie_basis(int mu, int nu);
Matrix5 lie_bracket(const Matrix5& a, const Matrix5& b);
Matrix5 lie_bracket(const LieBasisElement& a, const LieBasisElement& b);
// eta_{mu rho} M_{nu sigma} + eta_{nu sigma} M_{mu rho} - eta_{nu rho} M_{mu sigma} - eta_{mu sigma} M_{nu rho}
Matrix5 structure_constant_prediction(int mu, int nu, int rho, int sigma);

// exp(t G). Closed forms when G^3 in {0, G, -G} (null rotation, boost, rotation), Pade otherwise.
Matrix5 lorentz_exp(const Matrix5& G, double t);

enum class AbelianSubgroup { L1, L2, L3, L4 };

AbelianSubgroup parse_subgroup(std::string_view tag);
std::string_view subgroup_name(AbelianSubgroup s);
std::array<Matrix5, 2> subgroup_generators(AbelianSubgroup s);
// exp(t G1) exp(s G2)
LorentzMatrix5 abelian_flow(AbelianSubgroup s, double t, double u);
double abelian_commutator_residual(AbelianSubgroup s, double t, double u);

struct ObstructionReport {
    double max_residual = 0.0;            // |j12 L(t,s) j12 - L(-t,-s)|
    double max_flip_residual = 0.0;       // |j12 L(t,s) j12 - L(t,s)|, nonzero => j12 is no stabilizer
    std::vector<std::array<double, 3>> grid;  // (t, s, residual)
};

LorentzMatrix5 reflection_j12();
ObstructionReport reflection_obstruction_check(const std::vector<double>& ts,
                                               const std::vector<double>& ss);

}  // namespace warpds
