#include "doctest.h"

#include <cmath>

#include "warpds/geometry.hpp"
#include "warpds/wedges.hpp"

using namespace warpds;

namespace {

AmbientVector basis_vec(int mu)
{
    AmbientVector e = AmbientVector::Zero();
    e(mu) = 1.0;
    return e;
}

// Clifford relations checked in the 4x4 complex realization only.
Eigen::Matrix4cd cgamma(int mu) { return gamma(mu).to_complex(); }

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("minkowski form signature")
{
    CHECK(minkowski_form(basis_vec(0), basis_vec(0)) == 1.0);
    for (int k = 1; k < 5; ++k) CHECK(minkowski_form(basis_vec(k), basis_vec(k)) == -1.0);
    CHECK(minkowski_form(basis_vec(1), basis_vec(1)) == -1.0);

    Rng rng = make_stream(3, "form");
    std::normal_distribution<double> n;
    AmbientVector a, b;
    for (int i = 0; i < 5; ++i) { a(i) = n(rng); b(i) = n(rng); }
    CHECK(minkowski_form(a, b) == doctest::Approx(minkowski_form(b, a)));
    CHECK(minkowski_form(a, b) == doctest::Approx(a.dot(eta() * b)));
}

TEST_CASE("quaternion units and complex realization")
{
    const Quaternion e1 = Quaternion::unit(1), e2 = Quaternion::unit(2), e3 = Quaternion::unit(3);
    CHECK(e1 * e2 == e3);
    CHECK(e2 * e3 == e1);
    CHECK(e3 * e1 == e2);
    CHECK(e1 * e1 == Quaternion::real(-1));

    Rng rng = make_stream(4, "quat");
    std::normal_distribution<double> n;
    for (int i = 0; i < 50; ++i) {
        const Quaternion p{n(rng), n(rng), n(rng), n(rng)}, q{n(rng), n(rng), n(rng), n(rng)};
        CHECK((( p * q).to_complex() - p.to_complex() * q.to_complex()).norm() < 1e-13);
        CHECK(((p * q).conj().to_complex() - (q.conj() * p.conj()).to_complex()).norm() < 1e-13);
        CHECK((p.conj().to_complex() - p.to_complex().adjoint()).norm() < 1e-15);
        CHECK((p * p.conj()).w == doctest::Approx(p.norm2()));
    }
}

TEST_CASE("gamma matrices: Clifford relations in the complex realization")
{
    for (int mu = 0; mu < 5; ++mu)
        for (int nu = 0; nu < 5; ++nu) {
            const Eigen::Matrix4cd ac = cgamma(mu) * cgamma(nu) + cgamma(nu) * cgamma(mu);
            const double expect = mu == nu ? 2.0 * (mu == 0 ? 1.0 : -1.0) : 0.0;
            CHECK((ac - expect * Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() == 0.0);
        }
}

TEST_CASE("gamma examples")
{
    CHECK((gamma(0) * gamma(0)).max_abs_diff(QuatMatrix2::identity()) == 0.0);
    // (0 -1; 1 0)^2 = -1 by hand
    CHECK((cgamma(1) * cgamma(1) + Eigen::Matrix4cd::Identity()).norm() == 0.0);
    CHECK((gamma(1) * gamma(2)).max_abs_diff(-(gamma(2) * gamma(1))) == 0.0);
    CHECK_THROWS_AS(gamma(5), DomainError);
    CHECK_THROWS_AS(gamma(-1), DomainError);
}

TEST_CASE("pseudoscalar")
{
    // gamma_0...gamma_4 squares to +1 in signature (1,4), so it is -1 here and i*omega = -i.
    const Eigen::Matrix4cd w =
        cgamma(0) * cgamma(1) * cgamma(2) * cgamma(3) * cgamma(4);
    CHECK((w + Eigen::Matrix4cd::Identity()).norm() == 0.0);
    CHECK(gamma_pseudoscalar().max_abs_diff(-QuatMatrix2::identity()) == 0.0);
    const Eigen::Matrix4cd iw = cplx(0, 1) * w;
    CHECK((iw - Eigen::Matrix4cd::Identity()).norm() > 1.0);
}

TEST_CASE("trace over the complex realization")
{
    for (int mu = 0; mu < 5; ++mu)
        for (int nu = 0; nu < 5; ++nu) {
            const QuatMatrix2 p = gamma(mu) * gamma(nu);
            CHECK(p.trace4() == doctest::Approx(p.to_complex().trace().real()));
            CHECK(std::abs(p.to_complex().trace().imag()) < 1e-15);
        }
}

TEST_CASE("embed_point examples")
{
    const QuatMatrix2 x1 = embed_point(basis_vec(1));
    CHECK(x1 == gamma(1));
    const QuatMatrix2 lhs = x1.adjoint() * gamma(0) * x1 * gamma(0);
    CHECK(lhs.max_abs_diff(-QuatMatrix2::identity()) == 0.0);
    CHECK(embed_point(basis_vec(2)) == gamma(2));

    AmbientVector off = AmbientVector::Zero();
    off(0) = 1.0;
    CHECK_THROWS_AS(embed_point(off), DomainError);
    CHECK_NOTHROW(embed_point(off, EmbedMode::relaxed));
}

TEST_CASE("extract_point examples")
{
    CHECK((extract_point(gamma(1)) - basis_vec(1)).norm() == 0.0);
    CHECK((extract_point(gamma(0)) - basis_vec(0)).norm() == 0.0);
    for (int mu = 0; mu < 5; ++mu) CHECK((extract_point(gamma(mu)) - basis_vec(mu)).norm() == 0.0);
    // the identity matrix is not a combination of gamma matrices
    CHECK_THROWS_AS(extract_point(QuatMatrix2::identity()), DomainError);
}

TEST_CASE("roundtrip and eta identity on seeded hyperboloid points")
{
    const RegionSample s = sample_hyperboloid(1000, 20240917);
    double rt = 0.0, id = 0.0, on = 0.0;
    for (const auto& x : s.points) {
        on = std::max(on, std::abs(minkowski_form(x, x) + 1.0));
        rt = std::max(rt, (extract_point(embed_point(x)) - x).cwiseAbs().maxCoeff());
        id = std::max(id, eta_identity_residual(x));
    }
    CHECK(on < 1e-12);
    CHECK(rt < 1e-10);
    CHECK(id < 1e-12);
}

TEST_CASE("eta identity holds for the embedding of any ambient vector")
{
    Rng rng = make_stream(9, "ambient");
    std::normal_distribution<double> n;
    for (int i = 0; i < 50; ++i) {
        AmbientVector x;
        for (int k = 0; k < 5; ++k) x(k) = n(rng);
        CHECK(eta_identity_residual(x) < 1e-12);
    }
}

}  // TEST_SUITE
