#include "warpds/car_fock.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

namespace warpds {

// ---------------------------------------------------------------- FockSpace

FockSpace::FockSpace(int d_plus, int d_minus) : d_plus_(d_plus), d_minus_(d_minus)
{
    if (d_plus < 0 || d_minus < 0 || d_plus + d_minus > kMaxModes)
        throw ModelError("FockSpace: need d+, d- >= 0 and d+ + d- <= " + std::to_string(kMaxModes));
    dim_ = Eigen::Index{1} << (d_plus + d_minus);
    const auto pmask = static_cast<unsigned>((1u << d_plus) - 1u);
    charges_.resize(static_cast<std::size_t>(dim_));
    sectors_.resize(static_cast<std::size_t>(d_plus + d_minus + 1));
    for (Eigen::Index b = 0; b < dim_; ++b) {
        const auto u = static_cast<unsigned>(b);
        const int q = std::popcount(u & pmask) - std::popcount(u & ~pmask);
        charges_[static_cast<std::size_t>(b)] = q;
        sectors_[static_cast<std::size_t>(q + d_minus)].push_back(b);
    }
}

const std::vector<Eigen::Index>& FockSpace::sector(int n) const
{
    static const std::vector<Eigen::Index> empty;
    if (n < min_charge() || n > max_charge()) return empty;
    return sectors_[static_cast<std::size_t>(n + d_minus_)];
}

double FockSpace::jw_sign(Eigen::Index b, int j)
{
    const auto below = static_cast<unsigned>(b) & ((1u << j) - 1u);
    return (std::popcount(below) % 2 == 0) ? 1.0 : -1.0;
}

// ------------------------------------------------------------- FockOperator

FockOperator::FockOperator(FockSpacePtr space, CMatrix matrix, double shift_tol)
    : space_(std::move(space)), m_(std::move(matrix))
{
    if (!space_) throw DomainError("FockOperator: null Fock space");
    if (m_.rows() != space_->dim() || m_.cols() != space_->dim())
        throw DomainError("FockOperator: matrix size does not match the Fock space");
    std::set<int> seen;
    for (Eigen::Index c = 0; c < m_.cols(); ++c)
        for (Eigen::Index r = 0; r < m_.rows(); ++r)
            if (std::abs(m_(r, c)) > shift_tol) seen.insert(space_->charge(r) - space_->charge(c));
    shifts_.assign(seen.begin(), seen.end());
}

FockOperator FockOperator::identity(FockSpacePtr space)
{
    const auto n = space->dim();
    return {std::move(space), CMatrix::Identity(n, n)};
}

FockOperator FockOperator::zero(FockSpacePtr space)
{
    const auto n = space->dim();
    return {std::move(space), CMatrix::Zero(n, n)};
}

FockOperator FockOperator::component(int m) const
{
    CMatrix out = CMatrix::Zero(m_.rows(), m_.cols());
    for (Eigen::Index c = 0; c < m_.cols(); ++c)
        for (Eigen::Index r = 0; r < m_.rows(); ++r)
            if (space_->charge(r) - space_->charge(c) == m) out(r, c) = m_(r, c);
    return {space_, std::move(out)};
}

CMatrix FockOperator::block(int to, int from) const
{
    return m_(space_->sector(to), space_->sector(from));
}

FockOperator FockOperator::adjoint() const { return {space_, m_.adjoint()}; }

namespace {

void require_same_space(const FockOperator& a, const FockOperator& b)
{
    if (a.dim() != b.dim()) throw DomainError("FockOperator: dimension mismatch");
}

}  // namespace

FockOperator operator+(const FockOperator& a, const FockOperator& b)
{
    require_same_space(a, b);
    return {a.space_, a.m_ + b.m_};
}

FockOperator operator-(const FockOperator& a, const FockOperator& b)
{
    require_same_space(a, b);
    return {a.space_, a.m_ - b.m_};
}

FockOperator operator*(const FockOperator& a, const FockOperator& b)
{
    require_same_space(a, b);
    return {a.space_, a.m_ * b.m_};
}

FockOperator operator*(cplx s, const FockOperator& a) { return {a.space_, s * a.m_}; }

double distance(const FockOperator& a, const FockOperator& b)
{
    require_same_space(a, b);
    return operator_norm(CMatrix(a.matrix() - b.matrix()));
}

FockOperator commutator(const FockOperator& a, const FockOperator& b) { return a * b - b * a; }

FockOperator anticommutator(const FockOperator& a, const FockOperator& b) { return a * b + b * a; }

// ----------------------------------------------------------------- the model

ModelSpec default_model_spec()
{
    ModelSpec s;
    s.rotation_angle = std::numbers::pi / 4.0;
    s.seed = 20240917;
    return s;
}

OneParticleModel::OneParticleModel(ModelSpec spec) : spec_(std::move(spec))
{
    const int dp = spec_.d_plus, dm = spec_.d_minus;
    fock_ = std::make_shared<const FockSpace>(dp, dm);
    const int D = dp + dm;
    if (static_cast<int>(spec_.boost_freqs_plus.size()) != dp ||
        static_cast<int>(spec_.boost_freqs_minus.size()) != dm)
        throw ModelError("boost_freqs lengths must equal d+ and d-");
    freqs_.resize(D);
    for (int j = 0; j < dp; ++j) freqs_(j) = spec_.boost_freqs_plus[static_cast<std::size_t>(j)];
    for (int j = 0; j < dm; ++j) freqs_(dp + j) = spec_.boost_freqs_minus[static_cast<std::size_t>(j)];
    if (!freqs_.allFinite()) throw ModelError("boost_freqs must be finite");

    std::vector<bool> localized(static_cast<std::size_t>(D), false);
    for (int j : spec_.localized_modes) {
        if (j < 0 || j >= D) throw ModelError("localized mode index out of range");
        if (localized[static_cast<std::size_t>(j)]) throw ModelError("duplicate localized mode");
        localized[static_cast<std::size_t>(j)] = true;
    }

    if (!spec_.reflection_pairs.empty()) {
        reflection_perm_.assign(static_cast<std::size_t>(D), -1);
        for (auto [a, b] : spec_.reflection_pairs) {
            if (a < 0 || b < 0 || a >= D || b >= D || a == b)
                throw ModelError("reflection pair index out of range");
            if (reflection_perm_[static_cast<std::size_t>(a)] >= 0 ||
                reflection_perm_[static_cast<std::size_t>(b)] >= 0)
                throw ModelError("reflection pairing is not an involution");
            if (is_particle(a) != is_particle(b))
                throw ModelError("reflection pairs must not mix particle and antiparticle modes");
            if (localized[static_cast<std::size_t>(a)] == localized[static_cast<std::size_t>(b)])
                throw ModelError("reflection must map localized modes onto the complement");
            if (freqs_(a) != -freqs_(b))
                throw ModelError("reflection must reverse the boost: freq(pair) = -freq");
            reflection_perm_[static_cast<std::size_t>(a)] = b;
            reflection_perm_[static_cast<std::size_t>(b)] = a;
        }
        if (std::find(reflection_perm_.begin(), reflection_perm_.end(), -1) != reflection_perm_.end())
            throw ModelError("reflection pairing must cover every mode");
    }

    if (spec_.rotation) {
        rotation_ = *spec_.rotation;
    } else if (spec_.rotation_angle) {
        if (!std::isfinite(*spec_.rotation_angle)) throw ModelError("rotation angle must be finite");
        rotation_ = rotation_for_angle(*spec_.rotation_angle);
    }
    if (rotation_) {
        const CMatrix& r = *rotation_;
        if (r.rows() != D || r.cols() != D) throw ModelError("rotation must be a D x D matrix");
        if ((r.adjoint() * r - CMatrix::Identity(D, D)).cwiseAbs().maxCoeff() > 1e-10)
            throw ModelError("rotation must be unitary");
        if (dp > 0 && dm > 0 &&
            (r.topRightCorner(dp, dm).cwiseAbs().maxCoeff() > 1e-12 ||
             r.bottomLeftCorner(dm, dp).cwiseAbs().maxCoeff() > 1e-12))
            throw ModelError("rotation must commute with the charge (no particle/antiparticle mixing)");
    }
}

const std::vector<int>& OneParticleModel::reflection_permutation() const
{
    if (reflection_perm_.empty()) throw ModelError("model has no reflection");
    return reflection_perm_;
}

const CMatrix& OneParticleModel::rotation() const
{
    if (!rotation_) throw ModelError("model has no rotation");
    return *rotation_;
}

Eigen::MatrixXcd OneParticleModel::boost_generator_modes() const
{
    return freqs_.cast<cplx>().asDiagonal();
}

CMatrix OneParticleModel::rotation_for_angle(double phi) const
{
    const int D = modes();
    CMatrix r = CMatrix::Identity(D, D);
    const double c = std::cos(phi), s = std::sin(phi);
    auto rotate_block = [&](int offset, int count) {
        for (int i = 0; i + 1 < count; i += 2) {
            const int a = offset + i, b = offset + i + 1;
            r(a, a) = c;
            r(a, b) = -s;
            r(b, a) = s;
            r(b, b) = c;
        }
    };
    rotate_block(0, d_plus());
    rotate_block(d_plus(), d_minus());
    return r;
}

void OneParticleModel::check_doubled(const CVector& f) const
{
    if (f.size() != doubled_dim())
        throw DomainError("vector in SH must have dimension 2 (d+ + d-) = " +
                          std::to_string(doubled_dim()));
}

CVector OneParticleModel::conjugation(const CVector& f) const
{
    check_doubled(f);
    const int D = modes();
    CVector out(2 * D);
    out.head(D) = f.tail(D).conjugate();
    out.tail(D) = f.head(D).conjugate();
    return out;
}

CMatrix OneParticleModel::conjugate_operator(const CMatrix& s) const
{
    const int D = modes();
    CMatrix x = CMatrix::Zero(2 * D, 2 * D);
    x.topRightCorner(D, D).setIdentity();
    x.bottomLeftCorner(D, D).setIdentity();
    return x * s.conjugate() * x;
}

CMatrix OneParticleModel::basis_projection() const
{
    const int D = modes();
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(2 * D);
    for (int j = 0; j < D; ++j) d(is_particle(j) ? j : D + j) = 1.0;
    return d.asDiagonal();
}

CMatrix OneParticleModel::gauge_one_particle(double s) const
{
    const int D = modes();
    Eigen::VectorXcd d(2 * D);
    d.head(D).setConstant(std::polar(1.0, s));
    d.tail(D).setConstant(std::polar(1.0, -s));
    return d.asDiagonal();
}

CMatrix OneParticleModel::boost_one_particle(double t) const
{
    Eigen::VectorXcd d(modes());
    for (int j = 0; j < modes(); ++j) d(j) = std::polar(1.0, t * freqs_(j));
    return lift(d.asDiagonal().toDenseMatrix());
}

CMatrix OneParticleModel::lift(const CMatrix& r) const
{
    const int D = modes(), dp = d_plus(), dm = d_minus();
    if (r.rows() != D || r.cols() != D) throw DomainError("lift: mode unitary must be D x D");
    if (dp > 0 && dm > 0 &&
        (r.topRightCorner(dp, dm).cwiseAbs().maxCoeff() > 1e-12 ||
         r.bottomLeftCorner(dm, dp).cwiseAbs().maxCoeff() > 1e-12))
        throw DomainError("lift: mode unitary mixes particles and antiparticles");
    CMatrix u = CMatrix::Zero(2 * D, 2 * D);
    u.block(0, 0, dp, dp) = r.topLeftCorner(dp, dp);
    u.block(dp, dp, dm, dm) = r.bottomRightCorner(dm, dm).conjugate();
    u.block(D, D, dp, dp) = r.topLeftCorner(dp, dp).conjugate();
    u.block(D + dp, D + dp, dm, dm) = r.bottomRightCorner(dm, dm);
    return u;
}

// ------------------------------------------------------------ Fock operators

FockOperator creation(const OneParticleModel& model, int j)
{
    if (j < 0 || j >= model.modes()) throw DomainError("creation: mode index out of range");
    const auto& fs = model.fock();
    CMatrix m = CMatrix::Zero(fs->dim(), fs->dim());
    const Eigen::Index bit = Eigen::Index{1} << j;
    for (Eigen::Index b = 0; b < fs->dim(); ++b)
        if (!(b & bit)) m(b | bit, b) = FockSpace::jw_sign(b, j);
    return {fs, std::move(m)};
}

FockOperator annihilation(const OneParticleModel& model, int j)
{
    return creation(model, j).adjoint();
}

FockOperator field_B(const OneParticleModel& model, const CVector& f)
{
    model.check_doubled(f);
    const auto& fs = model.fock();
    const int D = model.modes();
    CMatrix m = CMatrix::Zero(fs->dim(), fs->dim());
    for (int j = 0; j < D; ++j) {
        const cplx up = model.is_particle(j) ? f(j) : f(D + j);
        const cplx down = model.is_particle(j) ? f(D + j) : f(j);
        const Eigen::Index bit = Eigen::Index{1} << j;
        for (Eigen::Index b = 0; b < fs->dim(); ++b) {
            const double sgn = FockSpace::jw_sign(b, j);
            if (b & bit)
                m(b ^ bit, b) += sgn * down;
            else
                m(b | bit, b) += sgn * up;
        }
    }
    return {fs, std::move(m)};
}

FockOperator spinor(const OneParticleModel& model, const CVector& f_minus)
{
    if (f_minus.size() != model.modes()) throw DomainError("spinor: f- must have dimension D");
    CVector f = CVector::Zero(model.doubled_dim());
    f.tail(model.modes()) = f_minus;
    return field_B(model, f);
}

FockOperator cospinor(const OneParticleModel& model, const CVector& f_plus)
{
    if (f_plus.size() != model.modes()) throw DomainError("cospinor: f+ must have dimension D");
    CVector f = CVector::Zero(model.doubled_dim());
    f.head(model.modes()) = f_plus;
    return field_B(model, f);
}

CVector vacuum(const OneParticleModel& model)
{
    CVector v = CVector::Zero(model.fock()->dim());
    v(0) = 1.0;
    return v;
}

namespace {

template <class Fn>
FockOperator diagonal_operator(const OneParticleModel& model, Fn&& value)
{
    const auto& fs = model.fock();
    Eigen::VectorXcd d(fs->dim());
    for (Eigen::Index b = 0; b < fs->dim(); ++b) d(b) = value(b);
    return {fs, d.asDiagonal().toDenseMatrix()};
}

double occupied_frequency(const OneParticleModel& model, Eigen::Index b)
{
    double k = 0.0;
    for (int j = 0; j < model.modes(); ++j)
        if (b & (Eigen::Index{1} << j)) k += model.freqs()(j);
    return k;
}

}  // namespace

FockOperator charge_operator(const OneParticleModel& model)
{
    return diagonal_operator(model, [&](Eigen::Index b) { return cplx(model.fock()->charge(b)); });
}

FockOperator number_operator(const OneParticleModel& model)
{
    return diagonal_operator(
        model, [](Eigen::Index b) { return cplx(std::popcount(static_cast<unsigned>(b))); });
}

FockOperator charge_projector(const OneParticleModel& model, int n)
{
    return diagonal_operator(
        model, [&](Eigen::Index b) { return cplx(model.fock()->charge(b) == n ? 1.0 : 0.0); });
}

FockOperator gauge_unitary(const OneParticleModel& model, double s)
{
    return diagonal_operator(
        model, [&](Eigen::Index b) { return std::polar(1.0, s * model.fock()->charge(b)); });
}

FockOperator boost_generator(const OneParticleModel& model)
{
    return diagonal_operator(model, [&](Eigen::Index b) { return cplx(occupied_frequency(model, b)); });
}

FockOperator boost_unitary(const OneParticleModel& model, double t)
{
    return diagonal_operator(
        model, [&](Eigen::Index b) { return std::polar(1.0, t * occupied_frequency(model, b)); });
}

FockOperator grading_Y(const OneParticleModel& model)
{
    return diagonal_operator(model, [](Eigen::Index b) {
        return cplx(std::popcount(static_cast<unsigned>(b)) % 2 == 0 ? 1.0 : -1.0);
    });
}

FockOperator twist_Z(const OneParticleModel& model)
{
    const FockOperator y = grading_Y(model);
    const auto& fs = model.fock();
    const CMatrix one = CMatrix::Identity(fs->dim(), fs->dim());
    return {fs, (one - cplx(0.0, 1.0) * y.matrix()) / std::sqrt(2.0)};
}

FockOperator second_quantize(const OneParticleModel& model, const CMatrix& r)
{
    const int D = model.modes();
    if (r.rows() != D || r.cols() != D) throw DomainError("second_quantize: r must be D x D");
    const auto& fs = model.fock();
    std::vector<CMatrix> cdag;
    cdag.reserve(static_cast<std::size_t>(D));
    for (int i = 0; i < D; ++i) cdag.push_back(creation(model, i).matrix());

    CMatrix out = CMatrix::Zero(fs->dim(), fs->dim());
    for (Eigen::Index b = 0; b < fs->dim(); ++b) {
        // |b> = c_{j1}^* ... c_{jk}^* Omega with j1 < ... < jk, all JW signs +1
        CVector v = CVector::Zero(fs->dim());
        v(0) = 1.0;
        for (int j = D - 1; j >= 0; --j) {
            if (!(b & (Eigen::Index{1} << j))) continue;
            CVector next = CVector::Zero(fs->dim());
            for (int i = 0; i < D; ++i)
                if (r(i, j) != cplx(0.0)) next += r(i, j) * (cdag[static_cast<std::size_t>(i)] * v);
            v = std::move(next);
        }
        out.col(b) = v;
    }
    return {fs, std::move(out)};
}

FockOperator dgamma(const OneParticleModel& model, const CMatrix& h)
{
    const int D = model.modes();
    if (h.rows() != D || h.cols() != D) throw DomainError("dgamma: h must be D x D");
    const auto& fs = model.fock();
    CMatrix out = CMatrix::Zero(fs->dim(), fs->dim());
    for (Eigen::Index b = 0; b < fs->dim(); ++b) {
        for (int j = 0; j < D; ++j) {
            const Eigen::Index bj = Eigen::Index{1} << j;
            if (!(b & bj)) continue;
            const Eigen::Index mid = b ^ bj;
            const double sj = FockSpace::jw_sign(b, j);
            for (int i = 0; i < D; ++i) {
                const Eigen::Index bi = Eigen::Index{1} << i;
                if (mid & bi || h(i, j) == cplx(0.0)) continue;
                out(mid | bi, b) += h(i, j) * sj * FockSpace::jw_sign(mid, i);
            }
        }
    }
    return {fs, std::move(out)};
}

FockOperator reflection_unitary(const OneParticleModel& model)
{
    const auto& perm = model.reflection_permutation();
    const int D = model.modes();
    CMatrix p = CMatrix::Zero(D, D);
    for (int j = 0; j < D; ++j) p(perm[static_cast<std::size_t>(j)], j) = 1.0;
    return second_quantize(model, p);
}

FockOperator rotation_unitary(const OneParticleModel& model)
{
    return second_quantize(model, model.rotation());
}

double field_norm_formula(const OneParticleModel& model, const CVector& f)
{
    // |f|^4 - |<f, Cf>|^2 via the Lagrange identity (|Cf| = |f|): a sum of
    // squares, free of cancellation when f is close to C-symmetric
    const CVector g = model.conjugation(f);
    double gram = 0.0;
    for (Eigen::Index i = 0; i < f.size(); ++i)
        for (Eigen::Index j = i + 1; j < f.size(); ++j) gram += std::norm(f(i) * g(j) - f(j) * g(i));
    return std::sqrt(0.5 * (f.squaredNorm() + std::sqrt(gram)));
}

// ---------------------------------------------------------------- quasifree

QuasifreeOperatorS::QuasifreeOperatorS(const OneParticleModel& model, CMatrix s, double tol)
    : s_(std::move(s))
{
    const auto n = model.doubled_dim();
    if (s_.rows() != n || s_.cols() != n) throw DomainError("S must act on the doubled space");
    if ((s_ - s_.adjoint()).cwiseAbs().maxCoeff() > tol) throw DomainError("S must be self-adjoint");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(s_);
    if (es.eigenvalues().minCoeff() < -tol || es.eigenvalues().maxCoeff() > 1.0 + tol)
        throw DomainError("S must satisfy 0 <= S <= 1");
    const CMatrix one = CMatrix::Identity(n, n);
    if ((model.conjugate_operator(s_) - (one - s_)).cwiseAbs().maxCoeff() > tol)
        throw DomainError("S must satisfy C S C = 1 - S");
}

cplx quasifree_npoint(const OneParticleModel& model, const QuasifreeOperatorS& s,
                      const std::vector<CVector>& fs)
{
    for (const auto& f : fs) model.check_doubled(f);
    const std::size_t len = fs.size();
    if (len % 2 == 1) return 0.0;
    if (len == 0) return 1.0;
    const std::size_t n = len / 2;

    const auto L = static_cast<Eigen::Index>(len);
    CMatrix sf(model.doubled_dim(), L), cf(model.doubled_dim(), L);
    for (Eigen::Index i = 0; i < L; ++i) {
        sf.col(i) = s.matrix() * fs[static_cast<std::size_t>(i)];
        cf.col(i) = model.conjugation(fs[static_cast<std::size_t>(i)]);
    }
    const CMatrix pair = cf.adjoint() * sf;  // <C f_i, S f_j>
    auto two_point = [&](std::size_t i, std::size_t j) {
        return pair(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    };

    // eps(1) < ... < eps(n), eps(j) < eps(j+n)
    cplx total = 0.0;
    std::vector<int> chosen(len, 0);
    std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(n), 1);
    std::vector<std::size_t> eps(len);
    do {
        std::vector<std::size_t> first, second;
        for (std::size_t i = 0; i < len; ++i) (chosen[i] ? first : second).push_back(i);
        do {
            bool ok = true;
            for (std::size_t j = 0; j < n && ok; ++j) ok = first[j] < second[j];
            if (!ok) continue;
            for (std::size_t j = 0; j < n; ++j) {
                eps[j] = first[j];
                eps[j + n] = second[j];
            }
            int inversions = 0;
            for (std::size_t a = 0; a < len; ++a)
                for (std::size_t b = a + 1; b < len; ++b) inversions += eps[a] > eps[b];
            cplx term = (inversions % 2 == 0) ? 1.0 : -1.0;
            for (std::size_t j = 0; j < n; ++j) term *= two_point(eps[j], eps[j + n]);
            total += term;
        } while (std::next_permutation(second.begin(), second.end()));
    } while (std::prev_permutation(chosen.begin(), chosen.end()));

    const bool flip = ((n * (n - 1) / 2) % 2) == 1;
    return flip ? -total : total;
}

cplx vacuum_expectation(const OneParticleModel& model, const std::vector<CVector>& fs)
{
    CVector v = vacuum(model);
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) v = field_B(model, *it) * v;
    return v(0);
}

// -------------------------------------------------------------- wedge spaces

WedgeTag parse_wedge_tag(std::string_view s)
{
    if (s == "W0") return WedgeTag::W0;
    if (s == "W0'" || s == "W0_prime") return WedgeTag::W0_prime;
    if (s == "rotated") return WedgeTag::rotated;
    throw DomainError("unknown wedge tag '" + std::string(s) + "'");
}

std::vector<CVector> wedge_subalgebra_basis(const OneParticleModel& model, WedgeTag tag)
{
    const int D = model.modes();
    std::vector<CVector> base;
    for (int copy = 0; copy < 2; ++copy) {
        for (int j : model.localized_modes()) {
            CVector e = CVector::Zero(2 * D);
            e(copy * D + j) = 1.0;
            base.push_back(std::move(e));
        }
    }
    if (tag == WedgeTag::W0) return base;

    CMatrix u;
    if (tag == WedgeTag::W0_prime) {
        const auto& perm = model.reflection_permutation();
        CMatrix p = CMatrix::Zero(D, D);
        for (int j = 0; j < D; ++j) p(perm[static_cast<std::size_t>(j)], j) = 1.0;
        u = model.lift(p);
    } else {
        u = model.lift(model.rotation());
    }
    for (auto& f : base) f = u * f;
    return base;
}

}  // namespace warpds
