#pragma once

#include <cstdint>
#include <random>

#include "stereodual/geometry.hpp"
#include "stereodual/phase_space.hpp"

namespace stereodual {

/// Seeded generator of phase points away from every singular set: |z| uniform
/// (by area/volume) in the annulus [r_min, r_max], momentum components
/// uniform in [-p_max, p_max].
class PointSampler {
public:
    explicit PointSampler(std::uint64_t seed, double r_min = 0.05, double r_max = 0.8,
                          double p_max = 2.0);

    PhasePoint planar();
    PhasePoint pair();
    PhasePoint sample(std::size_t n) { return n == 1 ? planar() : pair(); }

    double uniform(double lo, double hi);
    std::mt19937_64& engine() noexcept { return rng_; }

private:
    std::mt19937_64 rng_;
    double r_min_, r_max_, p_max_;
};

/// Point with osc_hamiltonian = E: keeps z and the direction of pi and rescales |pi|.
/// Throws PreconditionError when E is below the potential at z.
PhasePoint place_on_energy_surface(const PhasePoint& p, const SpaceParams& params, double E);

/// Four-dimensional point with u1_generator = 2s and osc_hamiltonian = E, built
/// from the configuration z and a free phase/split parameter drawn from `sampler`.
/// Throws PreconditionError when the level set is empty over z.
PhasePoint place_on_joint_level_set(const std::vector<cplx>& z, const SpaceParams& params,
                                    double E, double s, PointSampler& sampler);

}  // namespace stereodual
