#pragma once

#include <complex>
#include <span>
#include <vector>

namespace stereodual {

using cplx = std::complex<double>;

/// Curvature sign of the ambient quadric eps*x^2 + x_last^2 = R^2.
enum class Curvature : int { sphere = 1, pseudosphere = -1 };

constexpr double sign(Curvature c) noexcept { return c == Curvature::sphere ? 1.0 : -1.0; }

/// Points with |1 - z zbar| below this are rejected on the pseudosphere.
inline constexpr double kBoundaryGuard = 1e-9;

/// Configuration of one system.
///
/// `radius` is R0 for oscillator spaces and r0 for Coulomb spaces; `coupling`
/// is alpha (oscillator frequency) or gamma (Coulomb strength). `dim` is the
/// real dimension of the curved space.
struct SpaceParams {
    Curvature curvature = Curvature::sphere;
    double radius = 1.0;
    double coupling = 1.0;
    int dim = 2;

    double epsilon() const noexcept { return sign(curvature); }

    static SpaceParams oscillator(Curvature c, double R0, double alpha, int dim = 2);
    /// Coulomb-side systems live on the pseudosphere only.
    static SpaceParams coulomb(double r0, double gamma, int dim = 2);

    /// Throws DomainError when the fields are out of range.
    void validate() const;
    /// validate() plus the pseudosphere requirement of Coulomb-side systems.
    void validate_coulomb() const;
};

/// Embedding coordinates: x is the Euclidean d-vector, x_last the extra one.
struct AmbientPoint {
    std::vector<double> x;
    double x_last = 0.0;

    double x_squared() const noexcept;
    /// eps*x^2 + x_last^2 - R^2, relative to R^2.
    double constraint_residual(const SpaceParams& params) const noexcept;
};

/// x = R 2u/(1 + eps u^2), x_last = R (1 - eps u^2)/(1 + eps u^2) for real
/// stereographic coordinates u of any dimension.
AmbientPoint stereo_to_ambient(std::span<const double> u, const SpaceParams& params,
                               double guard = kBoundaryGuard);

/// Complex form: x1 + i x2 = R 2z/(1 + eps z zbar).
AmbientPoint stereo_to_ambient(cplx z, const SpaceParams& params, double guard = kBoundaryGuard);

/// Complex pair (4-dimensional space); x = (Re z1, Im z1, Re z2, Im z2) scaled.
AmbientPoint stereo_to_ambient(std::span<const cplx> z, const SpaceParams& params,
                               double guard = kBoundaryGuard);

/// 4R^2/(1 + eps z zbar)^2, the factor in ds^2 = factor * dz dzbar.
double metric_conformal_factor(cplx z, const SpaceParams& params, double guard = kBoundaryGuard);

/// z -> 1/z; exchanges the inside and outside of the unit disk.
cplx inversion(cplx z);

}  // namespace stereodual
