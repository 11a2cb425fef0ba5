#include "warpds/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace warpds {

Eigen::Matrix2cd Quaternion::to_complex() const
{
    Eigen::Matrix2cd m;
    m << cplx(w, -z), cplx(-y, -x),
         cplx(y, -x), cplx(w, z);
    return m;
}

QuatMatrix2 QuatMatrix2::adjoint() const
{
    const auto& m = *this;
    return {m(0, 0).conj(), m(1, 0).conj(), m(0, 1).conj(), m(1, 1).conj()};
}

double QuatMatrix2::trace4() const
{
    // each real part w contributes 2w to the trace of its 2x2 complex block
    return 2.0 * ((*this)(0, 0).w + (*this)(1, 1).w);
}

Eigen::Matrix4cd QuatMatrix2::to_complex() const
{
    Eigen::Matrix4cd out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out.block<2, 2>(2 * r, 2 * c) = (*this)(r, c).to_complex();
    return out;
}

double QuatMatrix2::max_abs_diff(const QuatMatrix2& other) const
{
    double d = 0.0;
    for (int i = 0; i < 4; ++i) {
        const Quaternion q = e_[static_cast<std::size_t>(i)] - other.e_[static_cast<std::size_t>(i)];
        d = std::max({d, std::abs(q.w), std::abs(q.x), std::abs(q.y), std::abs(q.z)});
    }
    return d;
}

QuatMatrix2 operator+(const QuatMatrix2& a, const QuatMatrix2& b)
{
    QuatMatrix2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

QuatMatrix2 operator-(const QuatMatrix2& a, const QuatMatrix2& b)
{
    QuatMatrix2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

QuatMatrix2 operator-(const QuatMatrix2& a) { return -1.0 * a; }

QuatMatrix2 operator*(double s, const QuatMatrix2& a)
{
    QuatMatrix2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e_[i] = s * a.e_[i];
    return r;
}

QuatMatrix2 operator*(const QuatMatrix2& a, const QuatMatrix2& b)
{
    QuatMatrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

double minkowski_form(const AmbientVector& a, const AmbientVector& b)
{
    return a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3) - a(4) * b(4);
}

const Matrix5& eta()
{
    static const Matrix5 m = [] {
        Matrix5 e = -Matrix5::Identity();
        e(0, 0) = 1.0;
        return e;
    }();
    return m;
}

QuatMatrix2 gamma(int mu)
{
    const Quaternion one = Quaternion::real(1.0);
    switch (mu) {
    case 0: return {one, {}, {}, -one};
    case 1: return {{}, -one, one, {}};
    case 2: return {{}, Quaternion::unit(1), Quaternion::unit(1), {}};
    case 3: return {{}, -Quaternion::unit(2), -Quaternion::unit(2), {}};
    case 4: return {{}, Quaternion::unit(3), Quaternion::unit(3), {}};
    default: throw DomainError("gamma: index " + std::to_string(mu) + " outside 0..4");
    }
}

QuatMatrix2 gamma_pseudoscalar()
{
    return gamma(0) * gamma(1) * gamma(2) * gamma(3) * gamma(4);
}

QuatMatrix2 embed_point(const AmbientVector& x, EmbedMode mode, double tol)
{
    if (!x.allFinite()) throw DomainError("embed_point: non-finite coordinates");
    if (mode == EmbedMode::strict && std::abs(minkowski_form(x, x) + 1.0) > tol)
        throw DomainError("embed_point: point is off the hyperboloid eta(x,x) = -1");
    QuatMatrix2 m;
    for (int mu = 0; mu < 5; ++mu) m = m + x(mu) * gamma(mu);
    return m;
}

AmbientVector extract_point(const QuatMatrix2& m, double tol)
{
    AmbientVector x;
    for (int mu = 0; mu < 5; ++mu) x(mu) = eta_diag(mu) * 0.25 * (gamma(mu) * m).trace4();
    const QuatMatrix2 back = embed_point(x, EmbedMode::relaxed);
    if (back.max_abs_diff(m) > tol)
        throw DomainError("extract_point: matrix is not a combination of gamma matrices");
    return x;
}

double eta_identity_residual(const AmbientVector& x)
{
    const QuatMatrix2 xt = embed_point(x, EmbedMode::relaxed);
    const QuatMatrix2 lhs = xt.adjoint() * gamma(0) * xt * gamma(0);
    return lhs.max_abs_diff(minkowski_form(x, x) * QuatMatrix2::identity());
}

}  // namespace warpds
