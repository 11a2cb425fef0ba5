#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "warpds/rng.hpp"
#include "warpds/spin_group.hpp"

namespace warpds {

inline constexpr double kMembershipMargin = 1e-12;

// The region frame * W0, W0 = {x^1 > |x^0|} on the hyperboloid.
class Wedge {
public:
    explicit Wedge(const LorentzMatrix5& frame);
    static Wedge reference();

    const LorentzMatrix5& frame() const { return frame_; }
    Wedge transformed(const LorentzMatrix5& g) const { return Wedge(g * frame_); }

    // y = frame^-1 x, y^1 - |y^0| > margin. Throws if x is off the hyperboloid.
    bool contains(const AmbientVector& x) const;
    // Signed distance y^1 - |y^0| used for boundary rejection.
    double depth(const AmbientVector& x) const;
    Wedge complement() const;
    // frame2^-1 frame1 stabilizes W0 (boost (+) SO(3) block test).
    bool equals(const Wedge& other, double tol = 1e-8) const;

private:
    LorentzMatrix5 frame_;
    LorentzMatrix5 inverse_;
};

bool stabilizes_reference_wedge(const LorentzMatrix5& g, double tol = 1e-8);

struct RegionSample {
    std::vector<AmbientVector> points;
    std::uint64_t seed = 0;
};

// x^0 = sinh rho, spatial part cosh rho * uniform S^3 direction, rho ~ U[-2, 2].
AmbientVector sample_hyperboloid_point(Rng& rng);
RegionSample sample_hyperboloid(std::size_t n, std::uint64_t seed);
// Points of W (away from the boundary by kMembershipMargin), rejection from the patch above.
AmbientVector sample_wedge_point(const Wedge& w, Rng& rng);
RegionSample sample_wedge(const Wedge& w, std::size_t n, std::uint64_t seed);

RegionSample edge_points(const Wedge& w, std::size_t n, std::uint64_t seed = 0);

// Random proper orthochronous element: alternating boosts and rotations in random planes.
LorentzMatrix5 random_lorentz(Rng& rng, double max_rapidity = 1.5, int factors = 6);

enum class ProbeOutcome { equal, witness, inconclusive };

struct ProbeVerdict {
    ProbeOutcome outcome = ProbeOutcome::inconclusive;
    std::optional<AmbientVector> witness;  // point of W1 outside W2
    std::size_t trials = 0;
};

ProbeVerdict inclusion_rigidity_probe(const Wedge& w1, const Wedge& w2, std::size_t n,
                                      std::uint64_t seed);

}  // namespace warpds
