#include "warpds/wedges.hpp"

#include <cmath>
#include <numbers>

namespace warpds {

Wedge::Wedge(const LorentzMatrix5& frame) : frame_(frame), inverse_(lorentz_inverse(frame))
{
    if (!is_proper_orthochronous(frame, 1e-8))
        throw DomainError("Wedge: frame is not a proper orthochronous Lorentz matrix");
}

Wedge Wedge::reference() { return Wedge(LorentzMatrix5::Identity()); }

double Wedge::depth(const AmbientVector& x) const
{
    const double scale = std::max(1.0, x.squaredNorm());
    if (!x.allFinite() || std::abs(minkowski_form(x, x) + 1.0) > 1e-9 * scale)
        throw DomainError("Wedge: point is off the hyperboloid");
    const AmbientVector y = inverse_ * x;
    return y(1) - std::abs(y(0));
}

bool Wedge::contains(const AmbientVector& x) const { return depth(x) > kMembershipMargin; }

Wedge Wedge::complement() const { return Wedge(frame_ * reflection_base()); }

bool stabilizes_reference_wedge(const LorentzMatrix5& g, double tol)
{
    if (g.block<2, 3>(0, 2).cwiseAbs().maxCoeff() > tol) return false;
    if (g.block<3, 2>(2, 0).cwiseAbs().maxCoeff() > tol) return false;
    const Eigen::Matrix2d b = g.block<2, 2>(0, 0);
    if (std::abs(b(0, 0) - b(1, 1)) > tol || std::abs(b(0, 1) - b(1, 0)) > tol) return false;
    if (b(0, 0) < 1.0 - tol || std::abs(b.determinant() - 1.0) > tol * std::max(1.0, b(0, 0) * b(0, 0)))
        return false;
    const Eigen::Matrix3d r = g.block<3, 3>(2, 2);
    return (r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= tol &&
           std::abs(r.determinant() - 1.0) <= tol;
}

bool Wedge::equals(const Wedge& other, double tol) const
{
    return stabilizes_reference_wedge(other.inverse_ * frame_, tol);
}

AmbientVector sample_hyperboloid_point(Rng& rng)
{
    std::uniform_real_distribution<double> rho_dist(-2.0, 2.0);
    std::normal_distribution<double> normal;
    const double rho = rho_dist(rng);
    Eigen::Vector4d dir;
    do {
        for (int i = 0; i < 4; ++i) dir(i) = normal(rng);
    } while (dir.norm() < 1e-12);
    dir.normalize();
    AmbientVector x;
    x(0) = std::sinh(rho);
    x.tail<4>() = std::cosh(rho) * dir;
    return x;
}

RegionSample sample_hyperboloid(std::size_t n, std::uint64_t seed)
{
    Rng rng = make_stream(seed, "hyperboloid");
    RegionSample s{{}, seed};
    s.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.points.push_back(sample_hyperboloid_point(rng));
    return s;
}

AmbientVector sample_wedge_point(const Wedge& w, Rng& rng)
{
    const Wedge w0 = Wedge::reference();
    for (;;) {
        const AmbientVector y = sample_hyperboloid_point(rng);
        if (w0.depth(y) > 1e-9) return w.frame() * y;
    }
}

RegionSample sample_wedge(const Wedge& w, std::size_t n, std::uint64_t seed)
{
    Rng rng = make_stream(seed, "wedge");
    RegionSample s{{}, seed};
    s.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.points.push_back(sample_wedge_point(w, rng));
    return s;
}

RegionSample edge_points(const Wedge& w, std::size_t n, std::uint64_t seed)
{
    if (n == 0) throw DomainError("edge_points: n must be at least 1");
    Rng rng = make_stream(seed, "edge");
    std::normal_distribution<double> normal;
    RegionSample s{{}, seed};
    s.points.reserve(n);
    while (s.points.size() < n) {
        Eigen::Vector3d d(normal(rng), normal(rng), normal(rng));
        if (d.norm() < 1e-12) continue;
        AmbientVector y = AmbientVector::Zero();
        y.tail<3>() = d.normalized();
        s.points.push_back(w.frame() * y);
    }
    return s;
}

LorentzMatrix5 random_lorentz(Rng& rng, double max_rapidity, int factors)
{
    std::uniform_int_distribution<int> idx(0, 4);
    std::uniform_real_distribution<double> rapidity(-max_rapidity, max_rapidity);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    LorentzMatrix5 g = LorentzMatrix5::Identity();
    for (int k = 0; k < factors; ++k) {
        int a = idx(rng), b = idx(rng);
        while (b == a) b = idx(rng);
        if (a > b) std::swap(a, b);
        const double p = a == 0 ? rapidity(rng) : angle(rng);
        g = g * lorentz_exp(lie_basis(a, b).matrix, p);
    }
    return g;
}

ProbeVerdict inclusion_rigidity_probe(const Wedge& w1, const Wedge& w2, std::size_t n,
                                      std::uint64_t seed)
{
    ProbeVerdict v;
    if (w1.equals(w2)) {
        v.outcome = ProbeOutcome::equal;
        return v;
    }
    Rng rng = make_stream(seed, "rigidity");
    for (std::size_t i = 0; i < n; ++i) {
        const AmbientVector x = sample_wedge_point(w1, rng);
        v.trials = i + 1;
        const double d = w2.depth(x);
        if (std::abs(d) <= kMembershipMargin) continue;  // too close to the boundary to decide
        if (d < 0.0) {
            v.outcome = ProbeOutcome::witness;
            v.witness = x;
            return v;
        }
    }
    v.outcome = ProbeOutcome::inconclusive;
    return v;
}

}  // namespace warpds
