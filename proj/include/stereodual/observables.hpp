#pragma once

#include "stereodual/geometry.hpp"
#include "stereodual/phase_space.hpp"

namespace stereodual {

/// Observables of the oscillator (z, pi) and of the Coulomb system (w, p) in
/// complex stereographic coordinates. The Coulomb system is always on the
/// pseudosphere; its PhasePoint stores w in `z` and p in `pi`.

/// H = (1 + eps z zbar)^2 pi pibar / (2R^2) + 2 alpha^2 R^2 z zbar / (1 - eps z zbar)^2,
/// with index sums for n = 2.
double osc_hamiltonian(const PhasePoint& p, const SpaceParams& params);
WirtingerGradient osc_hamiltonian_gradient(const PhasePoint& p, const SpaceParams& params);

/// H_C = (1 - w wbar)^2 p pbar / (2 r0^2) - (gamma/r0)(1 + w wbar)/(2|w|).
double coulomb_hamiltonian(const PhasePoint& p, const SpaceParams& params);
WirtingerGradient coulomb_hamiltonian_gradient(const PhasePoint& p, const SpaceParams& params);

struct RotationGenerators {
    cplx J_vec;  ///< pi + eps zbar^2 pibar
    double J;    ///< i(z pi - zbar pibar)
};

/// Planar (n = 1) rotation generators. J is the paper's normalization eps*J3/2,
/// exposed as is.
RotationGenerators rotation_generators(const PhasePoint& p, Curvature c);

/// i sum_a (z^a pi_a - zbar^a pibar_a); the U(1) generator for any n.
double u1_generator(const PhasePoint& p);
WirtingerGradient u1_generator_gradient(const PhasePoint& p);

WirtingerGradient rotation_vector_gradient(const PhasePoint& p, Curvature c);

/// I = J_vec^2/(2R^2) + (alpha^2 R^2/2) xbar^2/x3^2 (n = 1).
cplx hidden_invariant(const PhasePoint& p, const SpaceParams& params);
WirtingerGradient hidden_invariant_gradient(const PhasePoint& p, const SpaceParams& params);

/// A = -i J_C J_vec_C / r0 + gamma xbar_C/|x_C| at a Coulomb point (w, p).
cplx runge_lenz(const PhasePoint& p, const SpaceParams& coulomb);
WirtingerGradient runge_lenz_gradient(const PhasePoint& p, const SpaceParams& coulomb);

// Observable wrappers carrying analytic gradients.
Observable osc_hamiltonian_observable(const SpaceParams& params);
Observable coulomb_hamiltonian_observable(const SpaceParams& coulomb);
Observable u1_generator_observable();
Observable rotation_vector_observable(Curvature c);
Observable hidden_invariant_observable(const SpaceParams& params);
Observable runge_lenz_observable(const SpaceParams& coulomb);

}  // namespace stereodual
