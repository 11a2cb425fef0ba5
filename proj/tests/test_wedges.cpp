#include "doctest.h"

#include <cmath>
#include <numbers>

#include "warpds/wedges.hpp"

using namespace warpds;

namespace {

AmbientVector point(double x0, double x1, double x2 = 0, double x3 = 0, double x4 = 0)
{
    AmbientVector x;
    x << x0, x1, x2, x3, x4;
    return x;
}

}  // namespace

TEST_SUITE("wedges") {

TEST_CASE("membership examples")
{
    const Wedge w0 = Wedge::reference();
    CHECK(w0.contains(point(0, 1)));
    CHECK_FALSE(w0.contains(point(0, -1)));
    CHECK_THROWS_AS(w0.contains(point(0, 2)), DomainError);
}

TEST_CASE("boosts preserve W0 as a set")
{
    const Wedge w0 = Wedge::reference();
    const RegionSample s = sample_hyperboloid(500, 101);
    const Matrix5 L = boost_base(0.4);
    for (const auto& x : s.points) {
        if (std::abs(w0.depth(x)) < 1e-9) continue;
        CHECK(w0.contains(x) == w0.contains(L * x));
    }
    CHECK(w0.transformed(L).equals(w0));
}

TEST_CASE("hyperboloid samples lie on M")
{
    const RegionSample s = sample_hyperboloid(200, 5);
    for (const auto& x : s.points) CHECK(std::abs(minkowski_form(x, x) + 1.0) <= 1e-9);
    const RegionSample w = sample_wedge(Wedge::reference(), 200, 5);
    for (const auto& x : w.points) CHECK(Wedge::reference().contains(x));
}

TEST_CASE("causal complement")
{
    const Wedge w0 = Wedge::reference();
    const Wedge w0p = w0.complement();
    CHECK(w0p.complement().equals(w0));
    CHECK_FALSE(w0p.equals(w0));
    CHECK(w0p.contains(point(0, -1)));

    // ambient spacelike separation oracle
    const RegionSample a = sample_wedge(w0, 150, 1);
    const RegionSample b = sample_wedge(w0p, 150, 2);
    for (const auto& x : a.points)
        for (const auto& y : b.points) {
            const AmbientVector d = x - y;
            CHECK(minkowski_form(d, d) < 0.0);
        }
}

TEST_CASE("edges")
{
    const Wedge w0 = Wedge::reference();
    const RegionSample e = edge_points(w0, 50, 3);
    CHECK(e.points.size() == 50);
    for (const auto& x : e.points) {
        CHECK(x(0) == 0.0);
        CHECK(x(1) == 0.0);
        CHECK(minkowski_form(x, x) == doctest::Approx(-1.0));
        const AmbientVector y = boost_base(0.7) * x;
        CHECK(y(0) == 0.0);
        CHECK(y(1) == 0.0);
    }
    Rng rng = make_stream(8, "edge-g");
    const Matrix5 g = random_lorentz(rng);
    const RegionSample eg = edge_points(w0.transformed(g), 50, 3);
    for (std::size_t i = 0; i < eg.points.size(); ++i)
        CHECK((eg.points[i] - g * e.points[i]).cwiseAbs().maxCoeff() < 1e-12);
    CHECK_THROWS_AS(edge_points(w0, 0), DomainError);
}

TEST_CASE("transitive covariance of membership")
{
    Rng rng = make_stream(12, "cov");
    const RegionSample s = sample_hyperboloid(300, 13);
    for (int k = 0; k < 10; ++k) {
        const Matrix5 g = random_lorentz(rng);
        const Wedge w = Wedge(random_lorentz(rng, 0.7));
        const Wedge gw = w.transformed(g);
        const Matrix5 gi = lorentz_inverse(g);
        for (const auto& x : s.points) {
            const AmbientVector y = gi * x;
            if (std::abs(w.depth(y)) < 1e-6) continue;
            CHECK(gw.contains(x) == w.contains(y));
        }
    }
}

TEST_CASE("equality via the stabilizer")
{
    const Wedge w0 = Wedge::reference();
    const Matrix5 stab = boost_base(0.3) * lorentz_exp(lie_basis(2, 4).matrix, 1.1);
    CHECK(w0.transformed(stab).equals(w0));
    CHECK_FALSE(w0.transformed(lorentz_exp(lie_basis(1, 2).matrix, 0.3)).equals(w0));
    CHECK_FALSE(w0.transformed(lorentz_exp(lie_basis(0, 2).matrix, 0.3)).equals(w0));
}

TEST_CASE("rigidity probe examples")
{
    const Wedge w0 = Wedge::reference();
    CHECK(inclusion_rigidity_probe(w0, w0, 1000, 1).outcome == ProbeOutcome::equal);
    const ProbeVerdict v = inclusion_rigidity_probe(w0, w0.complement(), 1000, 1);
    REQUIRE(v.outcome == ProbeOutcome::witness);
    CHECK(w0.contains(*v.witness));
    CHECK_FALSE(w0.complement().contains(*v.witness));

    const Wedge rotated = w0.transformed(lorentz_exp(lie_basis(1, 2).matrix, 0.3));
    const ProbeVerdict r = inclusion_rigidity_probe(w0, rotated, 100000, 2);
    REQUIRE(r.outcome == ProbeOutcome::witness);
    CHECK(w0.contains(*r.witness));
    CHECK_FALSE(rotated.contains(*r.witness));
}

TEST_CASE("rigidity on random distinct pairs")
{
    Rng rng = make_stream(21, "pairs");
    int witnesses = 0;
    for (int i = 0; i < 40; ++i) {
        const Wedge a(random_lorentz(rng)), b(random_lorentz(rng));
        const ProbeVerdict v = inclusion_rigidity_probe(a, b, 100000, static_cast<std::uint64_t>(i));
        CHECK(v.outcome == ProbeOutcome::witness);
        witnesses += v.outcome == ProbeOutcome::witness;
    }
    CHECK(witnesses == 40);
}

}  // TEST_SUITE
