#include "stereodual/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "stereodual/errors.hpp"

namespace stereodual {

namespace {

constexpr cplx kI(0.0, 1.0);

void require_planar(const PhasePoint& p, const char* what) {
    if (p.n() != 1) throw std::invalid_argument(std::string(what) + " is defined for n = 1 only");
}

// 1 - eps u must stay away from zero (equatorial singularity of the potential).
void check_equator(double one_minus, const char* what) {
    if (std::abs(one_minus) < kBoundaryGuard)
        throw SingularityError(std::string(what) + ": z zbar = 1 on the sphere");
}

void check_disk(double one_plus, const char* what) {
    if (std::abs(one_plus) < kBoundaryGuard)
        throw BoundaryError(std::string(what) + ": |z| = 1 on the pseudosphere");
}

void check_coulomb(const PhasePoint& p, const char* what) {
    require_planar(p, what);
    const double v = std::norm(p.z[0]);
    if (v == 0.0) throw SingularityError(std::string(what) + ": Coulomb center w = 0");
    if (std::abs(1.0 - v) < kBoundaryGuard)
        throw SingularityError(std::string(what) + ": boundary |w| = 1");
}

}  // namespace

// ---------------------------------------------------------------- oscillator

double osc_hamiltonian(const PhasePoint& p, const SpaceParams& params) {
    const double eps = params.epsilon();
    const double R2 = params.radius * params.radius;
    const double a2 = params.coupling * params.coupling;
    const double u = p.z_norm2();
    const double plus = 1.0 + eps * u;
    const double minus = 1.0 - eps * u;
    check_disk(plus, "osc_hamiltonian");
    if (a2 > 0.0) check_equator(minus, "osc_hamiltonian");
    else return plus * plus * p.pi_norm2() / (2.0 * R2);
    return plus * plus * p.pi_norm2() / (2.0 * R2) + 2.0 * a2 * R2 * u / (minus * minus);
}

WirtingerGradient osc_hamiltonian_gradient(const PhasePoint& p, const SpaceParams& params) {
    const double eps = params.epsilon();
    const double R2 = params.radius * params.radius;
    const double a2 = params.coupling * params.coupling;
    const double u = p.z_norm2();
    const double P = p.pi_norm2();
    const double plus = 1.0 + eps * u;
    const double minus = 1.0 - eps * u;
    check_disk(plus, "osc_hamiltonian_gradient");
    if (a2 > 0.0) check_equator(minus, "osc_hamiltonian_gradient");

    const double K = plus * plus / (2.0 * R2);
    const double dK = eps * plus / R2;
    const double dV = a2 > 0.0 ? 2.0 * a2 * R2 * plus / (minus * minus * minus) : 0.0;
    const double du = dK * P + dV;

    WirtingerGradient g(p.n());
    for (std::size_t a = 0; a < p.n(); ++a) {
        g.dz[a] = du * std::conj(p.z[a]);
        g.dzb[a] = du * p.z[a];
        g.dpi[a] = K * std::conj(p.pi[a]);
        g.dpib[a] = K * p.pi[a];
    }
    return g;
}

// ------------------------------------------------------------------- Coulomb

double coulomb_hamiltonian(const PhasePoint& p, const SpaceParams& params) {
    check_coulomb(p, "coulomb_hamiltonian");
    const double r0 = params.radius;
    const double gamma = params.coupling;
    const double v = std::norm(p.z[0]);
    const double one_minus = 1.0 - v;
    return one_minus * one_minus * std::norm(p.pi[0]) / (2.0 * r0 * r0) -
           (gamma / r0) * (1.0 + v) / (2.0 * std::sqrt(v));
}

WirtingerGradient coulomb_hamiltonian_gradient(const PhasePoint& p, const SpaceParams& params) {
    check_coulomb(p, "coulomb_hamiltonian_gradient");
    const double r0 = params.radius;
    const double gamma = params.coupling;
    const cplx w = p.z[0];
    const cplx m = p.pi[0];
    const double v = std::norm(w);
    const double one_minus = 1.0 - v;
    // d/dv of the kinetic and potential parts; d(1+v)/(2 sqrt v)/dv = (v-1)/(4 v^{3/2}).
    const double dv = -one_minus * std::norm(m) / (r0 * r0) -
                      (gamma / r0) * (v - 1.0) / (4.0 * v * std::sqrt(v));
    const double K = one_minus * one_minus / (2.0 * r0 * r0);

    WirtingerGradient g(1);
    g.dz[0] = dv * std::conj(w);
    g.dzb[0] = dv * w;
    g.dpi[0] = K * std::conj(m);
    g.dpib[0] = K * m;
    return g;
}

// ---------------------------------------------------------------- generators

RotationGenerators rotation_generators(const PhasePoint& p, Curvature c) {
    require_planar(p, "rotation_generators");
    const cplx z = p.z[0];
    const cplx m = p.pi[0];
    const cplx zb = std::conj(z);
    return {m + sign(c) * zb * zb * std::conj(m), u1_generator(p)};
}

double u1_generator(const PhasePoint& p) {
    // i(z pi - conj(z pi)) = -2 Im(z pi)
    double s = 0.0;
    for (std::size_t a = 0; a < p.n(); ++a) s += -2.0 * std::imag(p.z[a] * p.pi[a]);
    return s;
}

WirtingerGradient u1_generator_gradient(const PhasePoint& p) {
    WirtingerGradient g(p.n());
    for (std::size_t a = 0; a < p.n(); ++a) {
        g.dz[a] = kI * p.pi[a];
        g.dzb[a] = -kI * std::conj(p.pi[a]);
        g.dpi[a] = kI * p.z[a];
        g.dpib[a] = -kI * std::conj(p.z[a]);
    }
    return g;
}

WirtingerGradient rotation_vector_gradient(const PhasePoint& p, Curvature c) {
    require_planar(p, "rotation_vector_gradient");
    const double eps = sign(c);
    const cplx zb = std::conj(p.z[0]);
    WirtingerGradient g(1);
    g.dz[0] = 0.0;
    g.dzb[0] = 2.0 * eps * zb * std::conj(p.pi[0]);
    g.dpi[0] = 1.0;
    g.dpib[0] = eps * zb * zb;
    return g;
}

// ------------------------------------------------------------ hidden symmetry

cplx hidden_invariant(const PhasePoint& p, const SpaceParams& params) {
    require_planar(p, "hidden_invariant");
    const AmbientPoint x = stereo_to_ambient(p.z[0], params);
    if (std::abs(x.x_last) < kBoundaryGuard * params.radius)
        throw SingularityError("hidden_invariant: x3 = 0");
    const double R2 = params.radius * params.radius;
    const double a2 = params.coupling * params.coupling;
    const cplx Jv = rotation_generators(p, params.curvature).J_vec;
    const cplx xbar(x.x[0], -x.x[1]);
    return Jv * Jv / (2.0 * R2) + 0.5 * a2 * R2 * xbar * xbar / (x.x_last * x.x_last);
}

WirtingerGradient hidden_invariant_gradient(const PhasePoint& p, const SpaceParams& params) {
    require_planar(p, "hidden_invariant_gradient");
    const double eps = params.epsilon();
    const double R2 = params.radius * params.radius;
    const double a2 = params.coupling * params.coupling;
    const cplx zb = std::conj(p.z[0]);
    const double minus = 1.0 - eps * std::norm(p.z[0]);
    check_equator(minus, "hidden_invariant_gradient");
    const double m3 = minus * minus * minus;

    // I = Jv^2/(2R^2) + 2 alpha^2 R^2 Q,  Q = zbar^2/(1 - eps z zbar)^2
    const cplx Jv = rotation_generators(p, params.curvature).J_vec;
    const WirtingerGradient dJ = rotation_vector_gradient(p, params.curvature);
    const cplx dQdz = 2.0 * eps * zb * zb * zb / m3;
    const cplx dQdzb = 2.0 * zb / m3;
    const double c = 2.0 * a2 * R2;

    WirtingerGradient g(1);
    g.dz[0] = Jv / R2 * dJ.dz[0] + c * dQdz;
    g.dzb[0] = Jv / R2 * dJ.dzb[0] + c * dQdzb;
    g.dpi[0] = Jv / R2 * dJ.dpi[0];
    g.dpib[0] = Jv / R2 * dJ.dpib[0];
    return g;
}

cplx runge_lenz(const PhasePoint& p, const SpaceParams& coulomb) {
    check_coulomb(p, "runge_lenz");
    const RotationGenerators gen = rotation_generators(p, Curvature::pseudosphere);
    const AmbientPoint x = stereo_to_ambient(p.z[0], coulomb);
    const cplx xbar(x.x[0], -x.x[1]);
    return -kI * gen.J * gen.J_vec / coulomb.radius +
           coulomb.coupling * xbar / std::sqrt(x.x_squared());
}

WirtingerGradient runge_lenz_gradient(const PhasePoint& p, const SpaceParams& coulomb) {
    check_coulomb(p, "runge_lenz_gradient");
    const double r0 = coulomb.radius;
    const double gamma = coulomb.coupling;
    const cplx w = p.z[0];
    const cplx wb = std::conj(w);
    const double v = std::norm(w);
    const double sv = std::sqrt(v);
    // xbar_C/|x_C| = sgn(1 - v) wbar / |w|
    const double sgn = v < 1.0 ? 1.0 : -1.0;

    const RotationGenerators gen = rotation_generators(p, Curvature::pseudosphere);
    const WirtingerGradient dJ = u1_generator_gradient(p);
    const WirtingerGradient dJv = rotation_vector_gradient(p, Curvature::pseudosphere);
    const cplx k = -kI / r0;

    WirtingerGradient g(1);
    g.dz[0] = k * (dJ.dz[0] * gen.J_vec + gen.J * dJv.dz[0]) - sgn * gamma * wb * wb / (2.0 * v * sv);
    g.dzb[0] = k * (dJ.dzb[0] * gen.J_vec + gen.J * dJv.dzb[0]) + sgn * gamma / (2.0 * sv);
    g.dpi[0] = k * (dJ.dpi[0] * gen.J_vec + gen.J * dJv.dpi[0]);
    g.dpib[0] = k * (dJ.dpib[0] * gen.J_vec + gen.J * dJv.dpib[0]);
    return g;
}

// ---------------------------------------------------------------- wrappers

Observable osc_hamiltonian_observable(const SpaceParams& params) {
    return {"H", [=](const PhasePoint& p) { return cplx(osc_hamiltonian(p, params)); },
            [=](const PhasePoint& p) { return osc_hamiltonian_gradient(p, params); }};
}

Observable coulomb_hamiltonian_observable(const SpaceParams& coulomb) {
    return {"H_C", [=](const PhasePoint& p) { return cplx(coulomb_hamiltonian(p, coulomb)); },
            [=](const PhasePoint& p) { return coulomb_hamiltonian_gradient(p, coulomb); }};
}

Observable u1_generator_observable() {
    return {"J", [](const PhasePoint& p) { return cplx(u1_generator(p)); },
            [](const PhasePoint& p) { return u1_generator_gradient(p); }};
}

Observable rotation_vector_observable(Curvature c) {
    return {"J_vec", [=](const PhasePoint& p) { return rotation_generators(p, c).J_vec; },
            [=](const PhasePoint& p) { return rotation_vector_gradient(p, c); }};
}

Observable hidden_invariant_observable(const SpaceParams& params) {
    return {"I", [=](const PhasePoint& p) { return hidden_invariant(p, params); },
            [=](const PhasePoint& p) { return hidden_invariant_gradient(p, params); }};
}

Observable runge_lenz_observable(const SpaceParams& coulomb) {
    return {"A", [=](const PhasePoint& p) { return runge_lenz(p, coulomb); },
            [=](const PhasePoint& p) { return runge_lenz_gradient(p, coulomb); }};
}

}  // namespace stereodual
