#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "warpds/linalg.hpp"

namespace warpds {

inline constexpr int kMaxModes = 10;

// Occupation-number basis of the fermionic Fock space over d+ particle and
// d- antiparticle modes. Bit j of a basis index is the occupation of mode j;
// particle modes come first, so mode j is a particle iff j < d+.
class FockSpace {
public:
    FockSpace(int d_plus, int d_minus);

    int d_plus() const { return d_plus_; }
    int d_minus() const { return d_minus_; }
    int modes() const { return d_plus_ + d_minus_; }
    Eigen::Index dim() const { return dim_; }

    // n = |occ+| - |occ-|
    int charge(Eigen::Index state) const { return charges_[static_cast<std::size_t>(state)]; }
    int min_charge() const { return -d_minus_; }
    int max_charge() const { return d_plus_; }
    // Basis indices of the charge-n sector, ascending (empty outside the spectrum).
    const std::vector<Eigen::Index>& sector(int n) const;

    // Jordan-Wigner sign of mode j acting on state b.
    static double jw_sign(Eigen::Index b, int j);

private:
    int d_plus_, d_minus_;
    Eigen::Index dim_;
    std::vector<int> charges_;
    std::vector<std::vector<Eigen::Index>> sectors_;
};

using FockSpacePtr = std::shared_ptr<const FockSpace>;

// Dense operator on a Fock space. The set of non-zero charge shifts is computed
// at construction; the shift components are produced on demand.
class FockOperator {
public:
    FockOperator(FockSpacePtr space, CMatrix matrix, double shift_tol = 0.0);

    static FockOperator identity(FockSpacePtr space);
    static FockOperator zero(FockSpacePtr space);

    const CMatrix& matrix() const { return m_; }
    const FockSpacePtr& space() const { return space_; }
    Eigen::Index dim() const { return m_.rows(); }

    // Shifts m with E(n+m) F E(n) != 0 for some n (entries above shift_tol).
    const std::vector<int>& shifts() const { return shifts_; }
    // Sum over n of E(n+m) F E(n).
    FockOperator component(int m) const;
    // Restriction E(to) F E(from) as a dense sector block.
    CMatrix block(int to, int from) const;

    FockOperator adjoint() const;
    double norm() const { return operator_norm(m_); }

    friend FockOperator operator+(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator-(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator*(cplx s, const FockOperator& a);
    friend CVector operator*(const FockOperator& a, const CVector& v) { return a.m_ * v; }

private:
    FockSpacePtr space_;
    CMatrix m_;
    std::vector<int> shifts_;
};

double distance(const FockOperator& a, const FockOperator& b);  // operator norm of a - b
FockOperator commutator(const FockOperator& a, const FockOperator& b);
FockOperator anticommutator(const FockOperator& a, const FockOperator& b);

struct ModelSpec {
    int d_plus = 2;
    int d_minus = 2;
    std::vector<double> boost_freqs_plus{1.0, -1.0};
    std::vector<double> boost_freqs_minus{1.0, -1.0};
    // Mode indices (particle block 0..d+-1, antiparticle block d+..) carrying W0.
    std::vector<int> localized_modes{0, 2};
    // Involutive pairing implementing the wedge reflection; empty means none.
    std::vector<std::pair<int, int>> reflection_pairs{{0, 1}, {2, 3}};
    // Planar rotation by this angle on consecutive mode pairs (2i, 2i+1) of each type.
    std::optional<double> rotation_angle;
    // Explicit mode-space unitary, overrides rotation_angle.
    std::optional<CMatrix> rotation;
    std::uint64_t seed = 0;
};

ModelSpec default_model_spec();

// Finite one-particle data: mode space h = C^D (D = d+ + d-), doubled space
// SH = h (+) h with C(f+ (+) f-) = conj f- (+) conj f+, basis projection
// P = Pi+ (+) Pi-, gauge v(s) = e^{is} (+) e^{-is}, boost k = diag(freqs).
class OneParticleModel {
public:
    explicit OneParticleModel(ModelSpec spec);

    const ModelSpec& spec() const { return spec_; }
    const FockSpacePtr& fock() const { return fock_; }
    int d_plus() const { return spec_.d_plus; }
    int d_minus() const { return spec_.d_minus; }
    int modes() const { return spec_.d_plus + spec_.d_minus; }
    Eigen::Index doubled_dim() const { return 2 * modes(); }
    bool is_particle(int j) const { return j < spec_.d_plus; }

    // Boost frequency of each mode, particles first.
    const Eigen::VectorXd& freqs() const { return freqs_; }
    Eigen::MatrixXcd boost_generator_modes() const;
    const std::vector<int>& localized_modes() const { return spec_.localized_modes; }
    bool has_reflection() const { return !reflection_perm_.empty(); }
    // Mode permutation of the reflection (involution).
    const std::vector<int>& reflection_permutation() const;
    bool has_rotation() const { return rotation_.has_value(); }
    const CMatrix& rotation() const;

    CVector conjugation(const CVector& f) const;  // the antiunitary C on SH
    CMatrix conjugate_operator(const CMatrix& s) const;  // C S C as a linear map
    CMatrix basis_projection() const;
    CMatrix gauge_one_particle(double s) const;
    CMatrix boost_one_particle(double t) const;
    // Action on SH induced by a charge-type-preserving mode unitary r.
    CMatrix lift(const CMatrix& r) const;
    // Planar rotation by phi on consecutive same-type mode pairs.
    CMatrix rotation_for_angle(double phi) const;

    void check_doubled(const CVector& f) const;

private:
    ModelSpec spec_;
    FockSpacePtr fock_;
    Eigen::VectorXd freqs_;
    std::vector<int> reflection_perm_;
    std::optional<CMatrix> rotation_;
};

// Jordan-Wigner c_j^* and c_j.
FockOperator creation(const OneParticleModel& model, int j);
FockOperator annihilation(const OneParticleModel& model, int j);

// B(f+ (+) f-) = sum_{j<d+} (f+_j c_j^* + f-_j c_j) + sum_{j>=d+} (f+_j c_j + f-_j c_j^*)
FockOperator field_B(const OneParticleModel& model, const CVector& f);
// Psi(f-) = B(0 (+) f-) lowers charge by one; Psi^dagger(f+) = B(f+ (+) 0) raises it.
FockOperator spinor(const OneParticleModel& model, const CVector& f_minus);
FockOperator cospinor(const OneParticleModel& model, const CVector& f_plus);

CVector vacuum(const OneParticleModel& model);
FockOperator charge_operator(const OneParticleModel& model);
FockOperator number_operator(const OneParticleModel& model);
FockOperator charge_projector(const OneParticleModel& model, int n);
FockOperator gauge_unitary(const OneParticleModel& model, double s);
FockOperator boost_generator(const OneParticleModel& model);
FockOperator boost_unitary(const OneParticleModel& model, double t);
FockOperator grading_Y(const OneParticleModel& model);
FockOperator twist_Z(const OneParticleModel& model);

// Gamma(r): c_j^* -> sum_i r_ij c_i^*, Omega -> Omega.
FockOperator second_quantize(const OneParticleModel& model, const CMatrix& r);
// dGamma(h) = sum_ij h_ij c_i^* c_j
FockOperator dgamma(const OneParticleModel& model, const CMatrix& h);
// Gamma of the reflection permutation; J U(t) J^* = U(-t).
FockOperator reflection_unitary(const OneParticleModel& model);
FockOperator rotation_unitary(const OneParticleModel& model);

// sqrt((|f|^2 + sqrt(|f|^4 - |<f, C f>|^2)) / 2)
double field_norm_formula(const OneParticleModel& model, const CVector& f);

// Two-point operator of a quasifree state: S = S^*, 0 <= S <= 1, C S C = 1 - S.
class QuasifreeOperatorS {
public:
    QuasifreeOperatorS(const OneParticleModel& model, CMatrix s, double tol = 1e-10);
    const CMatrix& matrix() const { return s_; }

private:
    CMatrix s_;
};

// omega_S(B(f_1) ... B(f_k)); zero for odd k.
cplx quasifree_npoint(const OneParticleModel& model, const QuasifreeOperatorS& s,
                      const std::vector<CVector>& fs);
// <Omega, B(f_1) ... B(f_k) Omega> by matrix products.
cplx vacuum_expectation(const OneParticleModel& model, const std::vector<CVector>& fs);

enum class WedgeTag { W0, W0_prime, rotated };
WedgeTag parse_wedge_tag(std::string_view s);

// Orthonormal basis of SH(W): W0 from localized modes in both copies, W0' its
// reflection image, rotated its image under the model rotation.
std::vector<CVector> wedge_subalgebra_basis(const OneParticleModel& model, WedgeTag tag);

}  // namespace warpds
