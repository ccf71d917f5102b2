#pragma once

#include "stereodual/geometry.hpp"
#include "stereodual/phase_space.hpp"

namespace stereodual {

// Pointwise residuals of the symmetry algebras, each scaled by max(1, |rhs|).

struct CubicAlgebraResidual {
    double I_J;     ///< {I, J} - 2i I
    double Ib_I;    ///< {Ibar, I} - 4i(alpha^2 J + eps J H/R0^2 - J^3/(2 R0^4))
    double I_H;     ///< {I, H}
    double max() const noexcept;
};

/// Oscillator (n = 1) algebra at p from analytic gradients.
CubicAlgebraResidual cubic_algebra_residual(const PhasePoint& p, const SpaceParams& oscillator,
                                            const BracketOptions& opts = {});

struct ReducedAlgebraResidual {
    double A_J;   ///< {A, J_C} - i A
    double Ab_A;  ///< {Abar, A} + 4i(H_C + J_C^2/r0^2) J_C
    double A_H;   ///< {A, H_C}
    double max() const noexcept;
};

/// Coulomb algebra at the (w, p) point `p`.
ReducedAlgebraResidual reduced_algebra_residual(const PhasePoint& p, const SpaceParams& coulomb,
                                                const BracketOptions& opts = {});

/// Largest relative gap max|analytic - fd| / max(1, |analytic|) over the
/// gradients of H, J, J_vec, I (oscillator) and H_C, A (Coulomb) at p.
double gradient_oracle_gap(const PhasePoint& p, const SpaceParams& oscillator, const SpaceParams& coulomb,
                           const FiniteDifference& fd = {});

}  // namespace stereodual
