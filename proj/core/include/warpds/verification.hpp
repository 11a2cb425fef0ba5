#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "warpds/deformation.hpp"
#include "warpds/rng.hpp"

namespace warpds {

// A residual compared against a tolerance. Bound::upper passes iff
// max_residual <= tolerance; Bound::lower (negative controls, witnesses)
// passes iff max_residual > tolerance.
struct CheckReport {
    enum class Bound { upper, lower };

    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    Bound bound = Bound::upper;
    std::map<std::string, double> metadata;
};

CheckReport make_report(std::string name, double residual, double tolerance,
                        std::map<std::string, double> metadata = {},
                        CheckReport::Bound bound = CheckReport::Bound::upper);

// Linear span of Fock operators with a Frobenius-orthonormal basis.
class OperatorSpan {
public:
    explicit OperatorSpan(FockSpacePtr space, double rank_tol = 1e-9);

    // Adds x if it is independent of the current span; returns whether it was added.
    bool add(const CMatrix& x);
    // |x - proj(x)|_F / max(1, |x|_F)
    double residual(const CMatrix& x) const;
    std::size_t size() const { return basis_.size(); }
    const std::vector<CMatrix>& basis() const { return basis_; }
    const FockSpacePtr& space() const { return space_; }
    // Span of f(b) over the basis.
    template <class Fn>
    OperatorSpan mapped(Fn&& f) const
    {
        OperatorSpan out(space_, rank_tol_);
        for (const auto& b : basis_) out.add(f(b));
        return out;
    }

private:
    FockSpacePtr space_;
    double rank_tol_;
    std::vector<CMatrix> basis_;
};

// Span of the unit and all products of at most `degree` generators.
OperatorSpan generated_span(const FockSpacePtr& space, const std::vector<CMatrix>& generators,
                            int degree, double rank_tol = 1e-9);
// Largest residual of the elements of a in b, and the dimension mismatch (0 if equal size).
double span_inclusion_residual(const OperatorSpan& a, const OperatorSpan& b);

struct NetAssignment {
    double kappa = 0.0;
    int degree = 4;
    std::map<WedgeTag, std::vector<FockOperator>> generators;  // undeformed B(f), f in SH(W)
    std::map<WedgeTag, OperatorSpan> undeformed;
    std::map<WedgeTag, OperatorSpan> deformed;
};

// W0 -> warp_kappa of its monomial span; W0' -> warp_{-kappa} of the reflected span;
// rotated (if present) -> warp along the pushed-forward flow.
NetAssignment build_net(const OneParticleModel& model, double kappa, int degree = 4);

struct TwistedLocalityOptions {
    int degree = 4;
    std::uint64_t seed = 0;
    int random_samples = 32;
    // Deform the reflected side with +kappa instead of -kappa.
    bool wrong_sign = false;
    // Use W0 itself as the reflected side (reflection removed).
    bool drop_reflection = false;
};

// max over samples of |[Z F Z^*, G]| and of the graded relations, F in the deformed W0
// algebra, G in the deformed W0' algebra.
CheckReport check_twisted_locality(const OneParticleModel& model, double kappa,
                                   const TwistedLocalityOptions& opts = {},
                                   double tolerance = 1e-10);

struct FixedPointResult {
    std::map<int, double> sector_residuals;   // n -> |[K, A E(n)]|
    double derivative_norm = 0.0;             // Richardson central difference
    double analytic_derivative_norm = 0.0;    // |sum_n i n [K, A E(n)]|
    double max_charged_residual() const;      // max over n != 0
};

FixedPointResult fixed_point_residual(const OneParticleModel& model, const FockOperator& A,
                                      double h = 1e-4);

struct InequivalenceWitness {
    double group_residual = 0.0;
    double fock_residual = 0.0;
};

// Base group: |Lambda(kappa) r - r Lambda(kappa)| with r = exp(phi M_12).
// Fock: |(warp_xi(Psi(f)) - warp_{r xi}(Psi(f))) phi| with f the first antiparticle
// mode and phi = c_0^* Omega of charge one.
InequivalenceWitness inequivalence_witness(const OneParticleModel& model, double kappa, double phi);

// a) boost stabilizer invariance, b) reflected span in the twisted commutant,
// c) gauge invariance of the deformed W0 span.
std::vector<CheckReport> causal_borchers_axioms(const OneParticleModel& model, double kappa,
                                                int degree = 4, double tolerance = 1e-10,
                                                bool drop_reflection = false);

// Spans assigned to W0 through different stabilizer elements coincide.
CheckReport check_net_well_definedness(const OneParticleModel& model, double kappa,
                                       int degree = 4, double tolerance = 1e-10);

// Random operator with unit operator norm.
FockOperator random_operator(const FockSpacePtr& space, Rng& rng);
// Random element of a span (unit operator norm).
FockOperator random_span_element(const OperatorSpan& span, Rng& rng);
// Parity parts (F +- Y F Y) / 2.
FockOperator even_part(const OneParticleModel& model, const FockOperator& F);
FockOperator odd_part(const OneParticleModel& model, const FockOperator& F);

struct LemmaSuiteOptions {
    std::vector<double> kappas{-1.0, -0.5, -0.1, 0.1, 0.5, 1.0};
    int samples = 100;
    std::uint64_t seed = 0;
};

// Adjoint, homomorphism, commutant, twisted commutant, unitary conjugation,
// vacuum invariance, inverse, associativity and kappa = 0 identity.
std::vector<CheckReport> deformation_lemma_checks(const OneParticleModel& model,
                                                  const LemmaSuiteOptions& opts);

struct OraclePoint {
    double eps = 0.0;
    double residual = 0.0;
};

std::vector<OraclePoint> oracle_sweep(const DeformationContext& ctx, const FockOperator& F,
                                      const std::vector<double>& eps, Cutoff cutoff);

}  // namespace warpds
