#include "stereodual/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "stereodual/observables.hpp"

namespace stereodual {

namespace {

const cplx kI(0.0, 1.0);

double scaled(cplx residual, double scale) { return std::abs(residual) / std::max(1.0, scale); }

double gap(const WirtingerGradient& a, const WirtingerGradient& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.n(); ++k)
        m = std::max({m, std::abs(a.dz[k] - b.dz[k]), std::abs(a.dzb[k] - b.dzb[k]), std::abs(a.dpi[k] - b.dpi[k]),
                      std::abs(a.dpib[k] - b.dpib[k])});
    return m / std::max(1.0, a.max_abs());
}

}  // namespace

double CubicAlgebraResidual::max() const noexcept { return std::max({I_J, Ib_I, I_H}); }

double ReducedAlgebraResidual::max() const noexcept { return std::max({A_J, Ab_A, A_H}); }

CubicAlgebraResidual cubic_algebra_residual(const PhasePoint& p, const SpaceParams& osc,
                                            const BracketOptions& opts) {
    const Observable I = hidden_invariant_observable(osc);
    const Observable Ib = conjugate(I);
    const Observable J = u1_generator_observable();
    const Observable H = osc_hamiltonian_observable(osc);

    const double R2 = osc.radius * osc.radius;
    const double a2 = osc.coupling * osc.coupling;
    const cplx Iv = I(p);
    const double j = J(p).real();
    const double h = H(p).real();
    const cplx rhs = 4.0 * kI * (a2 * j + osc.epsilon() * j * h / R2 - j * j * j / (2.0 * R2 * R2));

    CubicAlgebraResidual r;
    r.I_J = scaled(poisson_bracket(I, J, p, opts) - 2.0 * kI * Iv, std::abs(Iv));
    r.Ib_I = scaled(poisson_bracket(Ib, I, p, opts) - rhs, std::abs(rhs));
    r.I_H = scaled(poisson_bracket(I, H, p, opts), std::abs(Iv));
    return r;
}

ReducedAlgebraResidual reduced_algebra_residual(const PhasePoint& p, const SpaceParams& coulomb,
                                                const BracketOptions& opts) {
    const Observable A = runge_lenz_observable(coulomb);
    const Observable Ab = conjugate(A);
    const Observable J = u1_generator_observable();
    const Observable H = coulomb_hamiltonian_observable(coulomb);

    const double r0 = coulomb.radius;
    const cplx Av = A(p);
    const double j = J(p).real();
    const double h = H(p).real();
    const cplx rhs = -4.0 * kI * (h + j * j / (r0 * r0)) * j;

    ReducedAlgebraResidual r;
    r.A_J = scaled(poisson_bracket(A, J, p, opts) - kI * Av, std::abs(Av));
    r.Ab_A = scaled(poisson_bracket(Ab, A, p, opts) - rhs, std::abs(rhs));
    r.A_H = scaled(poisson_bracket(A, H, p, opts), std::abs(Av));
    return r;
}

double gradient_oracle_gap(const PhasePoint& p, const SpaceParams& osc, const SpaceParams& coulomb,
                           const FiniteDifference& fd) {
    const Observable obs[] = {osc_hamiltonian_observable(osc),       u1_generator_observable(),
                              rotation_vector_observable(osc.curvature), hidden_invariant_observable(osc),
                              coulomb_hamiltonian_observable(coulomb), runge_lenz_observable(coulomb)};
    double worst = 0.0;
    for (const Observable& f : obs) worst = std::max(worst, gap(f.gradient(p), fd_gradient(f.value, p, fd)));
    return worst;
}

}  // namespace stereodual
