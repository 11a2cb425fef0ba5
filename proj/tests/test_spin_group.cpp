#include "doctest.h"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/MatrixFunctions>

#include "warpds/spin_group.hpp"
#include "warpds/wedges.hpp"

using namespace warpds;

namespace {

constexpr double pi = std::numbers::pi;

Matrix5 E(int r, int c)
{
    Matrix5 m = Matrix5::Zero();
    m(r, c) = 1.0;
    return m;
}

double maxabs(const Matrix5& m) { return m.cwiseAbs().maxCoeff(); }

// Boost with rapidity 2 pi t in the (x0, x1) plane, written out by hand.
Matrix5 hand_boost(double t)
{
    Matrix5 m = Matrix5::Identity();
    m(0, 0) = m(1, 1) = std::cosh(2 * pi * t);
    m(0, 1) = m(1, 0) = std::sinh(2 * pi * t);
    return m;
}

}  // namespace

TEST_SUITE("spin_group") {

TEST_CASE("Sp(1,1) membership")
{
    CHECK(boost_cover(0.37).membership_residual() < 1e-12);
    CHECK(reflection_cover().membership_residual() == 0.0);
    CHECK_THROWS_AS(SpinElement(2.0 * QuatMatrix2::identity()), DomainError);
    const SpinElement g = boost_cover(0.4) * rotor_cover(2, 3, 0.9);
    CHECK((g * g.inverse()).matrix().max_abs_diff(QuatMatrix2::identity()) < 1e-13);
}

TEST_CASE("covering map on the identity and its negative")
{
    const SpinElement one(QuatMatrix2::identity());
    CHECK(maxabs(covering_hom(one) - Matrix5::Identity()) == 0.0);
    CHECK(maxabs(covering_hom(-one) - Matrix5::Identity()) == 0.0);
}

TEST_CASE("covering map doubles the rapidity")
{
    for (double t : {0.1, 0.5, 1.0}) {
        const Matrix5 L = covering_hom(boost_cover(t));
        CHECK(maxabs(L - hand_boost(t)) / std::cosh(2 * pi * t) < 1e-14);
        CHECK(maxabs(L - hand_boost(t)) < 1e-10);
    }
    CHECK(covering_hom(boost_cover(1.0))(0, 0) == doctest::Approx(std::cosh(2 * pi)));
}

TEST_CASE("boost_cover group law")
{
    CHECK(boost_cover(0).matrix().max_abs_diff(QuatMatrix2::identity()) == 0.0);
    Rng rng = make_stream(1, "boost");
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const double a = u(rng), b = u(rng);
        CHECK((boost_cover(a) * boost_cover(b)).matrix().max_abs_diff(boost_cover(a + b).matrix()) <
              1e-12 * std::cosh(pi * (std::abs(a) + std::abs(b))));
    }
}

TEST_CASE("boost_base")
{
    CHECK(maxabs(boost_base(0) - Matrix5::Identity()) == 0.0);
    const double t = 0.3;
    AmbientVector e1 = AmbientVector::Zero();
    e1(1) = 1.0;
    const AmbientVector y = boost_base(t) * e1;
    CHECK(y(0) == doctest::Approx(std::sinh(2 * pi * t)));
    CHECK(y(1) == doctest::Approx(std::cosh(2 * pi * t)));
    CHECK(lorentz_residual(boost_base(0.7)) < 1e-10 * std::cosh(2 * pi * 0.7) * std::cosh(2 * pi * 0.7));
    CHECK(is_proper_orthochronous(boost_base(0.2)));
}

TEST_CASE("reflections")
{
    const Matrix5 j = reflection_base();
    CHECK(maxabs(j * j - Matrix5::Identity()) == 0.0);
    CHECK(maxabs(covering_hom(reflection_cover()) - j) == 0.0);
    AmbientVector e1 = AmbientVector::Zero();
    e1(1) = 1.0;
    CHECK((covering_hom(reflection_cover()) * e1 + e1).norm() == 0.0);
    CHECK(maxabs(j * boost_base(0.3) * j - boost_base(-0.3)) < 1e-14);
}

TEST_CASE("covering map is a homomorphism on random words")
{
    Rng rng = make_stream(2, "words");
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    std::uniform_int_distribution<int> pick(0, 3), len(2, 6);
    double worst = 0.0;
    for (int w = 0; w < 100; ++w) {
        SpinElement g(QuatMatrix2::identity());
        Matrix5 L = Matrix5::Identity();
        const int n = len(rng);
        for (int k = 0; k < n; ++k) {
            const int c = pick(rng);
            const SpinElement x = c == 0 ? boost_cover(u(rng))
                                : c == 1 ? reflection_cover()
                                : c == 2 ? rotor_cover(2, 4, 6 * u(rng))
                                         : rotor_cover(0, 3, u(rng));
            g = g * x;
            L = L * covering_hom(x);
        }
        worst = std::max(worst, maxabs(covering_hom(g) - L) / std::max(1.0, maxabs(L)));
        CHECK(maxabs(covering_hom(g) - covering_hom(-g)) == 0.0);
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("rotors cover the exponentials of the Lie basis")
{
    const double th = 0.3;
    CHECK(maxabs(covering_hom(rotor_cover(1, 2, th)) - lorentz_exp(lie_basis(1, 2).matrix, -th)) < 1e-14);
    CHECK(maxabs(covering_hom(rotor_cover(0, 1, th)) - lorentz_exp(lie_basis(0, 1).matrix, -th)) < 1e-14);
}

TEST_CASE("stabilizer of W0 commutes with its boosts")
{
    Rng rng = make_stream(5, "stab");
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const Matrix5 g = boost_base(u(rng)) * lorentz_exp(lie_basis(2, 3).matrix, 3 * u(rng)) *
                          lorentz_exp(lie_basis(3, 4).matrix, 3 * u(rng));
        const Matrix5 L = boost_base(0.4 * u(rng));
        CHECK(maxabs(g * L * lorentz_inverse(g) - L) < 1e-10);
    }
}

TEST_CASE("Lie basis realization")
{
    CHECK(maxabs(lie_basis(1, 2).matrix - (E(1, 2) - E(2, 1))) == 0.0);
    CHECK(maxabs(lie_basis(0, 1).matrix - (E(0, 1) + E(1, 0))) == 0.0);
    CHECK(maxabs(lie_basis(0, 3).matrix - (E(0, 3) + E(3, 0))) == 0.0);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            CHECK(maxabs(lie_basis(a, b).matrix + lie_basis(b, a).matrix) == 0.0);
            // generators of O(1,4): M^T eta + eta M = 0
            const Matrix5 M = lie_basis(a, b).matrix;
            CHECK(maxabs(M.transpose() * eta() + eta() * M) == 0.0);
        }
}

TEST_CASE("brackets match the structure constants for every index quadruple")
{
    int checked = 0;
    for (int mu = 0; mu < 5; ++mu)
        for (int nu = 0; nu < 5; ++nu)
            for (int rho = 0; rho < 5; ++rho)
                for (int sigma = 0; sigma < 5; ++sigma) {
                    const Matrix5 lhs = lie_bracket(lie_basis(mu, nu), lie_basis(rho, sigma));
                    CHECK(maxabs(lhs - structure_constant_prediction(mu, nu, rho, sigma)) == 0.0);
                    ++checked;
                }
    CHECK(checked == 625);
    CHECK(maxabs(lie_bracket(lie_basis(1, 2), lie_basis(3, 4))) == 0.0);
    CHECK(maxabs(lie_bracket(lie_basis(0, 1), lie_basis(2, 3))) == 0.0);
    // [M12, M23] = -eta_22 M13 = M13
    CHECK(maxabs(lie_bracket(lie_basis(1, 2), lie_basis(2, 3)) - lie_basis(1, 3).matrix) == 0.0);
}

TEST_CASE("the printed L3 pair M12 - M01, M23 - M03 does not commute")
{
    const Matrix5 a = lie_basis(1, 2).matrix - lie_basis(0, 1).matrix;
    const Matrix5 b = lie_basis(2, 3).matrix - lie_basis(0, 3).matrix;
    CHECK(maxabs(lie_bracket(a, b) - 2.0 * lie_basis(1, 3).matrix) == 0.0);
    const auto g = subgroup_generators(AbelianSubgroup::L3);
    CHECK(maxabs(lie_bracket(g[0], g[1])) == 0.0);
    // null rotations: nilpotent and fixing the light ray e0 - e2
    AmbientVector ray = AmbientVector::Zero();
    ray(0) = 1.0;
    ray(2) = -1.0;
    for (const auto& G : g) {
        CHECK(maxabs(G * G * G) == 0.0);
        CHECK((G * ray).norm() == 0.0);
    }
}

TEST_CASE("lorentz_exp closed forms agree with the Pade exponential")
{
    Rng rng = make_stream(6, "exp");
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<Matrix5> gens;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) gens.push_back(lie_basis(a, b).matrix);
    for (auto s : {AbelianSubgroup::L3, AbelianSubgroup::L4})
        for (const auto& g : subgroup_generators(s)) gens.push_back(g);
    for (const auto& G : gens) {
        const double t = u(rng);
        const Matrix5 tg = t * G;
        const Matrix5 ref = tg.exp();
        CHECK(maxabs(lorentz_exp(G, t) - ref) < 1e-12 * std::max(1.0, maxabs(ref)));
    }
    const Matrix5 mixed = lie_basis(0, 1).matrix + 0.5 * lie_basis(2, 4).matrix;
    CHECK(lorentz_residual(lorentz_exp(mixed, 0.8)) < 1e-12);
}

TEST_CASE("two-parameter Abelian subgroups")
{
    for (auto s : {AbelianSubgroup::L1, AbelianSubgroup::L2, AbelianSubgroup::L3, AbelianSubgroup::L4})
        CHECK(parse_subgroup(subgroup_name(s)) == s);
    CHECK_THROWS_AS(parse_subgroup("L5"), DomainError);

    CHECK(maxabs(abelian_flow(AbelianSubgroup::L2, 0.9, 0.0) - lorentz_exp(lie_basis(0, 1).matrix, 0.9)) == 0.0);
    CHECK(maxabs(abelian_flow(AbelianSubgroup::L2, 0.9, 0.0) - boost_base(0.9 / (2 * pi))) < 1e-15);
    CHECK(maxabs(abelian_flow(AbelianSubgroup::L1, 2 * pi, 2 * pi) - Matrix5::Identity()) < 1e-14);

    Rng rng = make_stream(7, "abelian");
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (auto s : {AbelianSubgroup::L1, AbelianSubgroup::L2, AbelianSubgroup::L3, AbelianSubgroup::L4})
        for (int i = 0; i < 25; ++i) {
            const double t = u(rng), w = u(rng);
            CHECK(abelian_commutator_residual(s, t, w) < 1e-10);
            CHECK(is_proper_orthochronous(abelian_flow(s, t, w), 1e-9));
        }
}

TEST_CASE("j12 conjugation reverses the L2 flow")
{
    const ObstructionReport zero = reflection_obstruction_check({0.0}, {0.0});
    CHECK(zero.max_residual == 0.0);
    const ObstructionReport one = reflection_obstruction_check({1.0}, {1.0});
    CHECK(one.max_residual < 1e-10);
    CHECK(one.max_flip_residual > 1.0);

    // j12 W0 = W0' on sampled points
    const Wedge w0 = Wedge::reference(), w0p = w0.complement();
    const RegionSample s = sample_wedge(w0, 300, 11);
    for (const auto& x : s.points) {
        CHECK(w0p.contains(reflection_j12() * x));
        CHECK_FALSE(w0.contains(reflection_j12() * x));
    }
}

}  // TEST_SUITE
