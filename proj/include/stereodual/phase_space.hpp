#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "stereodual/geometry.hpp"

namespace stereodual {

/// Complex stereographic coordinates z^a and their conjugate momenta pi_a.
/// n = 1 for the two-dimensional systems, n = 2 for the four-dimensional oscillator.
struct PhasePoint {
    std::vector<cplx> z;
    std::vector<cplx> pi;

    PhasePoint() = default;
    PhasePoint(std::vector<cplx> z_, std::vector<cplx> pi_);
    static PhasePoint planar(cplx z, cplx pi) { return PhasePoint({z}, {pi}); }

    std::size_t n() const noexcept { return z.size(); }
    /// z zbar summed over components.
    double z_norm2() const noexcept;
    /// pi pibar summed over components.
    double pi_norm2() const noexcept;
    bool finite() const noexcept;
};

/// Wirtinger derivatives with z, zbar, pi, pibar treated as independent.
struct WirtingerGradient {
    std::vector<cplx> dz, dzb, dpi, dpib;

    explicit WirtingerGradient(std::size_t n = 1);
    std::size_t n() const noexcept { return dz.size(); }
    /// Max-norm over all 4n entries.
    double max_abs() const noexcept;
};

/// Gradient of conj(f) given the gradient of f.
WirtingerGradient conjugate(const WirtingerGradient& g);

/// A (possibly complex) function on phase space with an optional analytic gradient.
struct Observable {
    std::string name;
    std::function<cplx(const PhasePoint&)> value;
    std::function<WirtingerGradient(const PhasePoint&)> gradient;  // may be empty

    cplx operator()(const PhasePoint& p) const { return value(p); }
    bool has_gradient() const noexcept { return static_cast<bool>(gradient); }
};

/// Observable whose value and gradient are the complex conjugates of `f`.
Observable conjugate(const Observable& f);

struct FiniteDifference {
    /// Step relative to the norm of the z (resp. pi) block; 1 when the block is zero.
    double step_rel = 1e-6;
    /// 2 (three-point) or 4 (five-point) central stencil.
    int order = 2;
};

/// Central-difference Wirtinger gradient of `f` at `p`.
WirtingerGradient fd_gradient(const std::function<cplx(const PhasePoint&)>& f, const PhasePoint& p,
                              const FiniteDifference& fd = {});

enum class GradientSource { analytic_if_available, finite_difference };

struct BracketOptions {
    GradientSource source = GradientSource::analytic_if_available;
    FiniteDifference fd{};
};

/// Poisson bracket of the symplectic form dpi^dz + dpibar^dzbar, in the sign
/// convention {pi_a, z^b} = delta_a^b:
///
///   {f, g} = sum_a  df/dpi_a dg/dz^a - df/dz^a dg/dpi_a + (conjugate pair terms)
///
/// With this sign the flow of H is df/dt = {H, f}.
cplx poisson_bracket(const Observable& f, const Observable& g, const PhasePoint& p,
                     const BracketOptions& opts = {});

/// Bracket from precomputed gradients.
cplx poisson_bracket(const WirtingerGradient& df, const WirtingerGradient& dg);

/// Coordinate observables z^a, zbar^a, pi_a, pibar_a (exact gradients).
Observable coordinate_z(std::size_t a);
Observable coordinate_zbar(std::size_t a);
Observable coordinate_pi(std::size_t a);
Observable coordinate_pibar(std::size_t a);

}  // namespace stereodual
