#include "stereodual/geometry.hpp"

#include <cmath>
#include <string>

#include "stereodual/errors.hpp"

namespace stereodual {

SpaceParams SpaceParams::oscillator(Curvature c, double R0, double alpha, int dim) {
    SpaceParams p{c, R0, alpha, dim};
    p.validate();
    return p;
}

SpaceParams SpaceParams::coulomb(double r0, double gamma, int dim) {
    SpaceParams p{Curvature::pseudosphere, r0, gamma, dim};
    p.validate_coulomb();
    return p;
}

void SpaceParams::validate() const {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw DomainError("radius must be positive and finite, got " + std::to_string(radius));
    if (!(coupling >= 0.0) || !std::isfinite(coupling))
        throw DomainError("coupling must be nonnegative and finite, got " + std::to_string(coupling));
    if (dim < 2 || dim > 4)
        throw DomainError("dim must be 2, 3 or 4, got " + std::to_string(dim));
    if (curvature != Curvature::sphere && curvature != Curvature::pseudosphere)
        throw DomainError("epsilon must be +1 or -1");
}

void SpaceParams::validate_coulomb() const {
    validate();
    if (curvature != Curvature::pseudosphere)
        throw DomainError("Coulomb-side systems require epsilon = -1");
}

double AmbientPoint::x_squared() const noexcept {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double AmbientPoint::constraint_residual(const SpaceParams& params) const noexcept {
    const double R2 = params.radius * params.radius;
    return (params.epsilon() * x_squared() + x_last * x_last - R2) / R2;
}

namespace {

void check_boundary(double u2, double eps, double guard) {
    if (eps < 0.0 && std::abs(u2 - 1.0) < guard)
        throw BoundaryError("point within " + std::to_string(guard) +
                            " of the Poincare disk boundary (|z| = 1)");
}

}  // namespace

AmbientPoint stereo_to_ambient(std::span<const double> u, const SpaceParams& params, double guard) {
    const double eps = params.epsilon();
    double u2 = 0.0;
    for (double v : u) u2 += v * v;
    check_boundary(u2, eps, guard);

    const double R = params.radius;
    const double den = 1.0 + eps * u2;
    AmbientPoint a;
    a.x.reserve(u.size());
    for (double v : u) a.x.push_back(R * 2.0 * v / den);
    a.x_last = R * (1.0 - eps * u2) / den;
    return a;
}

AmbientPoint stereo_to_ambient(cplx z, const SpaceParams& params, double guard) {
    const double u[2] = {z.real(), z.imag()};
    return stereo_to_ambient(std::span<const double>(u), params, guard);
}

AmbientPoint stereo_to_ambient(std::span<const cplx> z, const SpaceParams& params, double guard) {
    std::vector<double> u;
    u.reserve(2 * z.size());
    for (const cplx& c : z) {
        u.push_back(c.real());
        u.push_back(c.imag());
    }
    return stereo_to_ambient(std::span<const double>(u), params, guard);
}

double metric_conformal_factor(cplx z, const SpaceParams& params, double guard) {
    const double eps = params.epsilon();
    const double u2 = std::norm(z);
    check_boundary(u2, eps, guard);
    const double den = 1.0 + eps * u2;
    return 4.0 * params.radius * params.radius / (den * den);
}

cplx inversion(cplx z) {
    if (z == cplx(0.0, 0.0)) throw DomainError("inversion is undefined at z = 0");
    return 1.0 / z;
}

}  // namespace stereodual
