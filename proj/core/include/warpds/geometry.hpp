#pragma once

#include <array>
#include <cstddef>

#include "warpds/linalg.hpp"

namespace warpds {

// Real quaternion w + x e1 + y e2 + z e3 with e1 e2 = e3 (and cyclic).
struct Quaternion {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    static constexpr Quaternion real(double a) { return {a, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion unit(int k)
    {
        return {0.0, k == 1 ? 1.0 : 0.0, k == 2 ? 1.0 : 0.0, k == 3 ? 1.0 : 0.0};
    }

    Quaternion conj() const { return {w, -x, -y, -z}; }
    double norm2() const { return w * w + x * x + y * y + z * z; }

    // 2x2 complex block of the realization e_a -> -i sigma_a.
    Eigen::Matrix2cd to_complex() const;

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b)
    {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b)
    {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
    friend Quaternion operator*(double s, const Quaternion& a)
    {
        return {s * a.w, s * a.x, s * a.y, s * a.z};
    }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b)
    {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
    friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

// 2x2 matrix over the quaternions, row-major.
class QuatMatrix2 {
public:
    QuatMatrix2() = default;
    QuatMatrix2(Quaternion a, Quaternion b, Quaternion c, Quaternion d) : e_{a, b, c, d} {}

    static QuatMatrix2 identity() { return {Quaternion::real(1), {}, {}, Quaternion::real(1)}; }
    static QuatMatrix2 zero() { return {}; }

    Quaternion& operator()(int r, int c) { return e_[static_cast<std::size_t>(2 * r + c)]; }
    const Quaternion& operator()(int r, int c) const { return e_[static_cast<std::size_t>(2 * r + c)]; }

    // Transpose of the entrywise quaternionic conjugate.
    QuatMatrix2 adjoint() const;
    // Trace in the 4x4 complex realization (always real).
    double trace4() const;
    Eigen::Matrix4cd to_complex() const;
    // Max-abs coefficient distance over all 16 real components.
    double max_abs_diff(const QuatMatrix2& other) const;

    friend QuatMatrix2 operator+(const QuatMatrix2& a, const QuatMatrix2& b);
    friend QuatMatrix2 operator-(const QuatMatrix2& a, const QuatMatrix2& b);
    friend QuatMatrix2 operator-(const QuatMatrix2& a);
    friend QuatMatrix2 operator*(double s, const QuatMatrix2& a);
    friend QuatMatrix2 operator*(const QuatMatrix2& a, const QuatMatrix2& b);
    friend bool operator==(const QuatMatrix2&, const QuatMatrix2&) = default;

private:
    std::array<Quaternion, 4> e_{};
};

using AmbientVector = Vector5;

inline constexpr double kGeometryTol = 1e-12;

// eta = diag(1,-1,-1,-1,-1)
double minkowski_form(const AmbientVector& a, const AmbientVector& b);
const Matrix5& eta();
inline double eta_diag(int mu) { return mu == 0 ? 1.0 : -1.0; }

// gamma_0 = diag(1,-1), gamma_1 = (0 -1; 1 0),
// gamma_k = (0 e_k; e_k 0) with e_2 = e1, e_3 = -e2, e_4 = e3.
QuatMatrix2 gamma(int mu);

// Product gamma_0 gamma_1 gamma_2 gamma_3 gamma_4.
QuatMatrix2 gamma_pseudoscalar();

enum class EmbedMode { strict, relaxed };

// x~ = sum_mu x^mu gamma_mu.
QuatMatrix2 embed_point(const AmbientVector& x, EmbedMode mode = EmbedMode::strict,
                        double tol = 1e-9);

// Unique linear inverse of embed_point: x^mu = eta^{mu mu} Tr(gamma_mu m) / 4.
// Throws if m is not of the form sum x^mu gamma_mu (roundtrip residual > tol).
AmbientVector extract_point(const QuatMatrix2& m, double tol = 1e-9);

// max |x~^* gamma_0 x~ gamma_0 - eta(x,x) 1| over components.
double eta_identity_residual(const AmbientVector& x);

}  // namespace warpds
