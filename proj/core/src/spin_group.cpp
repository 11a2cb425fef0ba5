#include "warpds/spin_group.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace warpds {

namespace {

double sp11_residual(const QuatMatrix2& m)
{
    return (m.adjoint() * gamma(0) * m).max_abs_diff(gamma(0));
}

}  // namespace

SpinElement::SpinElement(const QuatMatrix2& m, double tol) : m_(m)
{
    if (sp11_residual(m) > tol)
        throw DomainError("SpinElement: matrix violates g^* gamma_0 g = gamma_0");
}

SpinElement SpinElement::inverse() const
{
    return {gamma(0) * m_.adjoint() * gamma(0), Trusted{}};
}

double SpinElement::membership_residual() const { return sp11_residual(m_); }

SpinElement operator*(const SpinElement& a, const SpinElement& b)
{
    return {a.m_ * b.m_, SpinElement::Trusted{}};
}

SpinElement operator-(const SpinElement& a) { return {-a.m_, SpinElement::Trusted{}}; }

double lorentz_residual(const LorentzMatrix5& L)
{
    return (L.transpose() * eta() * L - eta()).cwiseAbs().maxCoeff();
}

bool is_proper_orthochronous(const LorentzMatrix5& L, double tol)
{
    const double scale = std::max(1.0, L.cwiseAbs().maxCoeff());
    return lorentz_residual(L) <= tol * scale * scale &&
           std::abs(L.determinant() - 1.0) <= 1e-8 * scale * scale && L(0, 0) >= 1.0 - tol;
}

LorentzMatrix5 lorentz_inverse(const LorentzMatrix5& L) { return eta() * L.transpose() * eta(); }

LorentzMatrix5 covering_hom(const SpinElement& g)
{
    const QuatMatrix2 gi = g.inverse().matrix();
    LorentzMatrix5 L;
    for (int nu = 0; nu < 5; ++nu) {
        const QuatMatrix2 conj = g.matrix() * gamma(nu) * gi;
        for (int mu = 0; mu < 5; ++mu)
            L(mu, nu) = eta_diag(mu) * 0.25 * (gamma(mu) * conj).trace4();
    }
    return L;
}

SpinElement boost_cover(double t)
{
    const double c = std::cosh(std::numbers::pi * t);
    const double s = std::sinh(std::numbers::pi * t);
    return SpinElement(QuatMatrix2(Quaternion::real(c), Quaternion::real(s),
                                   Quaternion::real(s), Quaternion::real(c)));
}

LorentzMatrix5 boost_base(double t)
{
    LorentzMatrix5 L = LorentzMatrix5::Identity();
    const double c = std::cosh(2.0 * std::numbers::pi * t);
    const double s = std::sinh(2.0 * std::numbers::pi * t);
    L(0, 0) = c;
    L(0, 1) = s;
    L(1, 0) = s;
    L(1, 1) = c;
    return L;
}

LorentzMatrix5 reflection_base()
{
    LorentzMatrix5 L = -LorentzMatrix5::Identity();
    L(0, 0) = 1.0;
    return L;
}

SpinElement reflection_cover() { return SpinElement(gamma(0)); }

SpinElement rotor_cover(int a, int b, double theta)
{
    if (a < 0 || b > 4 || a >= b) throw DomainError("rotor_cover: need 0 <= a < b <= 4");
    const QuatMatrix2 gg = gamma(a) * gamma(b);
    const double h = 0.5 * theta;
    if (a == 0)  // (gamma_0 gamma_b)^2 = +1
        return SpinElement(std::cosh(h) * QuatMatrix2::identity() + std::sinh(h) * gg);
    return SpinElement(std::cos(h) * QuatMatrix2::identity() + std::sin(h) * gg);
}

LieBasisElement lie_basis(int mu, int nu)
{
    if (mu < 0 || mu > 4 || nu < 0 || nu > 4) throw DomainError("lie_basis: index outside 0..4");
    LieBasisElement e{mu, nu, Matrix5::Zero()};
    if (mu == nu) return e;
    Matrix5 m = Matrix5::Zero();
    m(nu, mu) = 1.0;
    m(mu, nu) = -1.0;
    e.matrix = m * eta();
    return e;
}

Matrix5 lie_bracket(const Matrix5& a, const Matrix5& b) { return a * b - b * a; }

Matrix5 lie_bracket(const LieBasisElement& a, const LieBasisElement& b)
{
    return lie_bracket(a.matrix, b.matrix);
}

Matrix5 structure_constant_prediction(int mu, int nu, int rho, int sigma)
{
    const Matrix5& e = eta();
    return e(mu, rho) * lie_basis(nu, sigma).matrix + e(nu, sigma) * lie_basis(mu, rho).matrix -
           e(nu, rho) * lie_basis(mu, sigma).matrix - e(mu, sigma) * lie_basis(nu, rho).matrix;
}

Matrix5 lorentz_exp(const Matrix5& G, double t)
{
    const Matrix5 G2 = G * G;
    const Matrix5 G3 = G2 * G;
    const double scale = std::max(1.0, G.cwiseAbs().maxCoeff());
    const double tol = 1e-14 * scale * scale * scale;
    const Matrix5 I = Matrix5::Identity();
    if (G3.cwiseAbs().maxCoeff() <= tol) return I + t * G + 0.5 * t * t * G2;
    if ((G3 - G).cwiseAbs().maxCoeff() <= tol)
        return I + std::sinh(t) * G + (std::cosh(t) - 1.0) * G2;
    if ((G3 + G).cwiseAbs().maxCoeff() <= tol)
        return I + std::sin(t) * G + (1.0 - std::cos(t)) * G2;
    const Matrix5 tg = t * G;
    return tg.exp();
}

AbelianSubgroup parse_subgroup(std::string_view tag)
{
    if (tag == "L1") return AbelianSubgroup::L1;
    if (tag == "L2") return AbelianSubgroup::L2;
    if (tag == "L3") return AbelianSubgroup::L3;
    if (tag == "L4") return AbelianSubgroup::L4;
    throw DomainError("unknown Abelian subgroup tag '" + std::string(tag) + "'");
}

std::string_view subgroup_name(AbelianSubgroup s)
{
    switch (s) {
    case AbelianSubgroup::L1: return "L1";
    case AbelianSubgroup::L2: return "L2";
    case AbelianSubgroup::L3: return "L3";
    case AbelianSubgroup::L4: return "L4";
    }
    return "?";
}

std::array<Matrix5, 2> subgroup_generators(AbelianSubgroup s)
{
    auto M = [](int a, int b) { return lie_basis(a, b).matrix; };
    switch (s) {
    case AbelianSubgroup::L1: return {M(1, 2), M(3, 4)};
    case AbelianSubgroup::L2: return {M(0, 1), M(2, 3)};
    // null rotations fixing the light ray e0 - e2
    case AbelianSubgroup::L3: return {M(2, 1) - M(0, 1), M(2, 3) - M(0, 3)};
    case AbelianSubgroup::L4: return {M(2, 1) - M(0, 1), M(3, 4)};
    }
    throw DomainError("subgroup_generators: bad tag");
}

LorentzMatrix5 abelian_flow(AbelianSubgroup s, double t, double u)
{
    const auto g = subgroup_generators(s);
    return lorentz_exp(g[0], t) * lorentz_exp(g[1], u);
}

double abelian_commutator_residual(AbelianSubgroup s, double t, double u)
{
    const auto g = subgroup_generators(s);
    const Matrix5 a = lorentz_exp(g[0], t);
    const Matrix5 b = lorentz_exp(g[1], u);
    return (a * b - b * a).cwiseAbs().maxCoeff();
}

LorentzMatrix5 reflection_j12()
{
    LorentzMatrix5 j = LorentzMatrix5::Identity();
    j(1, 1) = -1.0;
    j(2, 2) = -1.0;
    return j;
}

ObstructionReport reflection_obstruction_check(const std::vector<double>& ts,
                                               const std::vector<double>& ss)
{
    ObstructionReport rep;
    const LorentzMatrix5 j = reflection_j12();
    for (double t : ts) {
        for (double s : ss) {
            const LorentzMatrix5 L = abelian_flow(AbelianSubgroup::L2, t, s);
            const LorentzMatrix5 conj = j * L * j;
            const double r =
                (conj - abelian_flow(AbelianSubgroup::L2, -t, -s)).cwiseAbs().maxCoeff();
            rep.max_residual = std::max(rep.max_residual, r);
            rep.max_flip_residual =
                std::max(rep.max_flip_residual, (conj - L).cwiseAbs().maxCoeff());
            rep.grid.push_back({t, s, r});
        }
    }
    return rep;
}

}  // namespace warpds
