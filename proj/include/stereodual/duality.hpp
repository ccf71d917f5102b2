#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

#include "stereodual/geometry.hpp"
#include "stereodual/integrator.hpp"
#include "stereodual/phase_space.hpp"

namespace stereodual {

// ---------------------------------------------------------------- Bohlin --

/// Parameters exchanged by the oscillator -> Coulomb duality at energy E.
struct DualityRecord {
    double E = 0.0;
    double alpha = 0.0;
    double epsilon = 1.0;
    double R0 = 1.0;
    double r0 = 1.0;     ///< R0^2
    double gamma = 0.0;  ///< E/2
    double E_C = 0.0;    ///< -(alpha^2 + eps E/r0)/2

    SpaceParams coulomb_params() const { return SpaceParams::coulomb(r0, gamma); }
};

/// w = z^2, p = pi/(2z). Throws DomainError at z = 0.
PhasePoint bohlin_map(const PhasePoint& p);

DualityRecord bohlin_params(double E, const SpaceParams& oscillator);

/// |H_C(bohlin_map(p)) - E_C| with the Coulomb parameters of bohlin_params(E).
/// Throws PreconditionError when |H_osc(p) - E| > level_tol * max(1, |E|).
double bohlin_surface_check(const PhasePoint& p, const SpaceParams& oscillator, double E,
                            double level_tol = 1e-12);

/// Residuals of J -> 2 J_C and I -> 2 A at the image of p.
struct ConstantsMapResidual {
    double J;
    double I;
};
ConstantsMapResidual bohlin_constants_map(const PhasePoint& p, const SpaceParams& oscillator);

/// Real coordinates (Re z, Im z, Re pi, Im pi) of an n = 1 point and back.
std::array<double, 4> to_real(const PhasePoint& p);
PhasePoint from_real(const std::array<double, 4>& x);

/// Matrix of omega = dpi^dz + dpibar^dzbar in the coordinates of to_real().
std::array<std::array<double, 4>, 4> symplectic_matrix();

/// max |(J^T Omega J - Omega)_ij| for the five-point finite-difference
/// Jacobian J of bohlin_map at p. `step_rel` scales with |z| and |pi|.
double bohlin_canonicity_residual(const PhasePoint& p, double step_rel = 1e-3);

void write_duality_record_csv(std::ostream& out, const DualityRecord& rec);

// --------------------------------------------------- Kustaanheimo-Stiefel --

/// U(1)-reduced point: KS coordinates, momenta, and monopole charge s = J/2.
struct ReducedPoint {
    std::array<double, 3> u{};
    std::array<double, 3> p{};
    double s = 0.0;

    double u_norm() const noexcept;
    double p_norm2() const noexcept;
};

/// u = z sigma zbar, p = (z sigma pi + pibar sigma zbar)/(2 z zbar) with
///   u1 = z1 zbar2 + z2 zbar1,  u2 = i(z2 zbar1 - z1 zbar2),  u3 = |z1|^2 - |z2|^2,
/// so that |u| = z zbar. Throws DomainError at z = 0.
ReducedPoint ks_map(const PhasePoint& p);

/// u_k and p_k (k = 0, 1, 2) as observables with analytic gradients.
Observable ks_u_observable(int k);
Observable ks_p_observable(int k);

struct ReducedBracketResidual {
    double uu = 0.0;  ///< max |{u_i, u_j}|
    double pu = 0.0;  ///< max |{p_i, u_j} - delta_ij|
    double pp = 0.0;  ///< max |{p_i, p_j} - c s eps_ijk u_k/|u|^3| / max(1, |s|/|u|^2)

    double max() const noexcept;
};

ReducedBracketResidual reduced_bracket_check(const PhasePoint& p, const BracketOptions& opts = {});

/// {p1,p2} |u|^3 / (s u3) computed with five-point finite differences only.
double measure_monopole_constant(const PhasePoint& p);

/// |(1-u^2)^2/(8 r0^2) (p^2 + s^2/u^2) - (gamma/r0)(1+u^2)/(2|u|) - E_C| at ks_map(p),
/// with r0, gamma, E_C from bohlin_params(E). Throws PreconditionError when
/// |H_osc(p) - E| > level_tol * max(1, |E|).
double mic_surface_check(const PhasePoint& p, const SpaceParams& oscillator, double E,
                         double level_tol = 1e-12);

/// Tolerance used by the ambient potentials to test pseudosphere membership.
inline constexpr double kMembershipTol = 1e-9;

/// (s^2/r0^2)(x4^2/(2|x|^2) - 2) - (gamma/r0) x4/|x|; x must satisfy x4^2 - x^2 = r0^2.
double mic_potential_ambient(std::span<const double, 3> x, double x4, double s, double gamma,
                             double r0, double tol = kMembershipTol);

/// (j(j+1)/r0^2)(x6^2/(2x^2) - 2) - (gamma/r0) x6/(2|x|) on the five-dimensional pseudosphere.
double su2_potential_ambient(std::span<const double, 5> x, double x6, double j, double gamma,
                             double r0, double tol = kMembershipTol);

struct ReducedTrajectory {
    std::vector<double> times;
    std::vector<ReducedPoint> points;
};

ReducedTrajectory push_forward_ks(const Trajectory& t);

/// CSV: t, u1, u2, u3, p1, p2, p3, s; 17 significant digits.
void write_reduced_csv(std::ostream& out, const ReducedTrajectory& t);

}  // namespace stereodual
