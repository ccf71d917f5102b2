#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "stereodual/constants.hpp"
#include "stereodual/duality.hpp"
#include "stereodual/errors.hpp"
#include "stereodual/observables.hpp"
#include "stereodual/sampling.hpp"

using namespace stereodual;

namespace {

const cplx I1(0.0, 1.0);

// Oscillator point on H = E built from a random configuration.
PhasePoint on_surface(PointSampler& s, const SpaceParams& params, double E) {
    for (;;) {
        const PhasePoint p = s.sample(params.dim == 4 ? 2 : 1);
        try {
            return place_on_energy_surface(p, params, E);
        } catch (const PreconditionError&) {
        }
    }
}

std::vector<cplx> random_pair(PointSampler& s) { return s.pair().z; }

}  // namespace

TEST_CASE("Bohlin map values and double cover") {
    const PhasePoint q = bohlin_map(PhasePoint::planar(2.0, 4.0));
    CHECK(q.z[0] == cplx(4.0));
    CHECK(q.pi[0] == cplx(1.0));
    CHECK_THROWS_AS(bohlin_map(PhasePoint::planar(0.0, 1.0)), DomainError);

    PointSampler s(31);
    for (int i = 0; i < 100; ++i) {
        const PhasePoint p = s.planar();
        const PhasePoint a = bohlin_map(p);
        const PhasePoint b = bohlin_map(PhasePoint::planar(-p.z[0], -p.pi[0]));
        CHECK(std::abs(a.z[0] - b.z[0]) < 1e-15);
        CHECK(std::abs(a.pi[0] - b.pi[0]) < 1e-14);
    }
}

TEST_CASE("Bohlin map is canonical") {
    const auto Om = symplectic_matrix();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(Om[i][j] == -Om[j][i]);
    // omega(d/dRe z, d/dRe pi) from dpi^dz + c.c. = -2
    CHECK(Om[0][2] == -2.0);

    PointSampler s(37);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) worst = std::max(worst, bohlin_canonicity_residual(s.planar()));
    CHECK(worst < 1e-9);

    // real coordinates round-trip
    const PhasePoint p = s.planar();
    const auto x = to_real(p);
    CHECK(from_real(x).z[0] == p.z[0]);
    CHECK(from_real(x).pi[0] == p.pi[0]);
}

TEST_CASE("Bohlin parameter map") {
    const auto rec = bohlin_params(2.0, SpaceParams::oscillator(Curvature::pseudosphere, 1.0, 1.0));
    CHECK(rec.r0 == 1.0);
    CHECK(rec.gamma == 1.0);
    CHECK(rec.E_C == doctest::Approx(0.5).epsilon(1e-15));

    const auto zero = bohlin_params(0.0, SpaceParams::oscillator(Curvature::sphere, 1.3, 0.4));
    CHECK(zero.gamma == 0.0);

    PointSampler s(41);
    for (int i = 0; i < 200; ++i) {
        const double R = s.uniform(0.2, 3.0), alpha = s.uniform(0.0, 2.0), E = s.uniform(-5.0, 5.0);
        for (Curvature c : {Curvature::sphere, Curvature::pseudosphere}) {
            const auto r = bohlin_params(E, SpaceParams::oscillator(c, R, alpha));
            CHECK(std::abs(r.r0 - R * R) <= 1e-14 * R * R);
            CHECK(r.gamma == E / 2.0);
            CHECK(std::abs(-2.0 * r.E_C - (alpha * alpha + sign(c) * E / r.r0)) < 1e-14 * std::max(1.0, std::abs(r.E_C)));
            if (c == Curvature::sphere) CHECK((r.E_C < 0.0) == (alpha * alpha + E / r.r0 > 0.0));
        }
        const auto doubled = bohlin_params(2.0 * E, SpaceParams::oscillator(Curvature::sphere, R, alpha));
        CHECK(doubled.gamma == 2.0 * bohlin_params(E, SpaceParams::oscillator(Curvature::sphere, R, alpha)).gamma);
    }
    CHECK_THROWS(bohlin_params(1.0, SpaceParams::oscillator(Curvature::sphere, 1.0, 1.0, 4)));

    std::ostringstream out;
    write_duality_record_csv(out, rec);
    CHECK(out.str().rfind("E,alpha,epsilon,R0,r0,gamma,E_C\n2,1,-1,1,1,1,0.5", 0) == 0);
}

TEST_CASE("oscillator energy surface lands on the Coulomb surface") {
    PointSampler s(43);
    for (Curvature c : {Curvature::sphere, Curvature::pseudosphere}) {
        const auto params = SpaceParams::oscillator(c, 1.2, 0.9);
        double worst = 0.0, worst_J = 0.0, worst_I = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double E = s.uniform(0.2, 3.0);
            const PhasePoint p = on_surface(s, params, E);
            worst = std::max(worst, bohlin_surface_check(p, params, E));
            const auto m = bohlin_constants_map(p, params);
            worst_J = std::max(worst_J, m.J);
            worst_I = std::max(worst_I, m.I);
        }
        CHECK(worst < 1e-10);
        CHECK(worst_J < 1e-10);
        CHECK(worst_I < 1e-10);
    }
    // the check refuses points off the energy surface
    const auto params = SpaceParams::oscillator(Curvature::sphere, 1.0, 1.0);
    CHECK_THROWS_AS(bohlin_surface_check(PhasePoint::planar(0.3, 0.4), params, 10.0), PreconditionError);
}

TEST_CASE("KS map basics") {
    const ReducedPoint r = ks_map(PhasePoint({1.0, 0.0}, {0.0, 0.0}));
    CHECK(r.u[0] == 0.0);
    CHECK(r.u[1] == 0.0);
    CHECK(r.u[2] == 1.0);
    CHECK(r.u_norm() == 1.0);
    CHECK_THROWS_AS(ks_map(PhasePoint({0.0, 0.0}, {1.0, 0.0})), DomainError);

    PointSampler s(47);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    double worst = 0.0, worst_fiber = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const PhasePoint p = s.pair();
        const ReducedPoint a = ks_map(p);
        const double zz = p.z_norm2();
        worst = std::max(worst, std::abs(a.u_norm() - zz) / zz);
        CHECK(a.u[2] == doctest::Approx(std::norm(p.z[0]) - std::norm(p.z[1])));
        CHECK(a.s == doctest::Approx(u1_generator(p) / 2.0));

        const cplx ph = std::polar(1.0, angle(s.engine()));
        const ReducedPoint b = ks_map(PhasePoint({p.z[0] * ph, p.z[1] * ph}, {p.pi[0] / ph, p.pi[1] / ph}));
        for (int k = 0; k < 3; ++k) {
            worst_fiber = std::max(worst_fiber, std::abs(a.u[k] - b.u[k]) / std::max(1.0, a.u_norm()));
            worst_fiber = std::max(worst_fiber, std::abs(a.p[k] - b.p[k]) / std::max(1.0, std::sqrt(a.p_norm2())));
        }
        worst_fiber = std::max(worst_fiber, std::abs(a.s - b.s) / std::max(1.0, std::abs(a.s)));
    }
    CHECK(worst < 1e-12);
    CHECK(worst_fiber < 1e-12);
}

TEST_CASE("KS component gradients match finite differences") {
    PointSampler s(53);
    for (int i = 0; i < 50; ++i) {
        const PhasePoint p = s.pair();
        for (int k = 0; k < 3; ++k) {
            for (const Observable& f : {ks_u_observable(k), ks_p_observable(k)}) {
                const auto a = f.gradient(p);
                const auto b = fd_gradient(f.value, p);
                double gap = 0.0;
                for (std::size_t j = 0; j < 2; ++j)
                    gap = std::max({gap, std::abs(a.dz[j] - b.dz[j]), std::abs(a.dzb[j] - b.dzb[j]),
                                    std::abs(a.dpi[j] - b.dpi[j]), std::abs(a.dpib[j] - b.dpib[j])});
                CHECK(gap < 1e-6 * std::max(1.0, a.max_abs()));
                CHECK(std::abs(f(p).imag()) < 1e-15);
            }
        }
    }
}

TEST_CASE("reduced symplectic structure") {
    PointSampler s(59);
    ReducedBracketResidual worst;
    for (int i = 0; i < 1000; ++i) {
        const auto r = reduced_bracket_check(s.pair());
        worst.uu = std::max(worst.uu, r.uu);
        worst.pu = std::max(worst.pu, r.pu);
        worst.pp = std::max(worst.pp, r.pp);
    }
    CHECK(worst.uu < 1e-9);
    CHECK(worst.pu < 1e-8);
    CHECK(worst.pp < 1e-8);
    CHECK(worst.max() < 1e-8);
}

TEST_CASE("monopole constant re-measured by brute force") {
    PointSampler seed7(7);
    CHECK(measure_monopole_constant(seed7.pair()) == doctest::Approx(kMonopoleBracketConstant).epsilon(1e-7));

    // constancy on a fixed J level set
    const auto params = SpaceParams::oscillator(Curvature::sphere, 1.0, 1.0, 4);
    PointSampler s(61);
    const double charge = 0.35;
    int measured = 0;
    while (measured < 20) {
        PhasePoint p;
        try {
            p = place_on_joint_level_set(random_pair(s), params, 6.0, charge, s);
        } catch (const PreconditionError&) {
            continue;
        }
        const ReducedPoint r = ks_map(p);
        if (std::abs(r.u[2]) < 0.05 * r.u_norm()) continue;
        CHECK(r.s == doctest::Approx(charge).epsilon(1e-12));
        CHECK(measure_monopole_constant(p) == doctest::Approx(kMonopoleBracketConstant).epsilon(1e-6));
        ++measured;
    }
}

TEST_CASE("MIC-Kepler energy surface") {
    PointSampler s(67);
    for (Curvature c : {Curvature::sphere, Curvature::pseudosphere}) {
        const auto params = SpaceParams::oscillator(c, 1.1, 1.0, 4);
        double worst = 0.0;
        int built = 0;
        while (built < 1000) {
            const double E = s.uniform(0.5, 3.0), charge = s.uniform(-0.5, 0.5);
            PhasePoint p;
            try {
                p = place_on_joint_level_set(random_pair(s), params, E, charge, s);
            } catch (const PreconditionError&) {
                continue;
            }
            ++built;
            worst = std::max(worst, mic_surface_check(p, params, E));
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("MIC surface along a pushed-forward trajectory") {
    const auto params = SpaceParams::oscillator(Curvature::pseudosphere, 1.0, 1.0, 4);
    PointSampler s(71);
    const double E = 0.3;
    const PhasePoint p0 = place_on_joint_level_set({cplx(0.3, 0.1), cplx(-0.2, 0.15)}, params, E, 0.05, s);
    const HamiltonianSystem sys(SystemKind::osc4d, params);
    const Trajectory tr = integrate(p0, sys, 30.0);
    double worst = 0.0;
    for (const auto& p : tr.states) worst = std::max(worst, mic_surface_check(p, params, E, 1e-9));
    CHECK(worst < 1e-8);

    const ReducedTrajectory red = push_forward_ks(tr);
    REQUIRE(red.points.size() == tr.size());
    for (const auto& r : red.points) CHECK(r.s == doctest::Approx(0.05).epsilon(1e-9));

    std::ostringstream out;
    write_reduced_csv(out, red);
    CHECK(out.str().rfind("t,u1,u2,u3,p1,p2,p3,s\n", 0) == 0);
}

TEST_CASE("ambient MIC-Kepler potential") {
    const std::array<double, 3> x{4.0 / 3.0, 0.0, 0.0};
    CHECK(mic_potential_ambient(x, 5.0 / 3.0, 1.0, 0.0, 1.0) == doctest::Approx(25.0 / 32.0 - 2.0).epsilon(1e-14));
    CHECK(mic_potential_ambient(x, 5.0 / 3.0, 0.0, 0.7, 1.0) ==
          doctest::Approx(-0.7 * (5.0 / 3.0) / (4.0 / 3.0)).epsilon(1e-14));
    CHECK_THROWS_AS(mic_potential_ambient(x, 2.0, 1.0, 1.0, 1.0), DomainError);
    const std::array<double, 3> origin{0.0, 0.0, 0.0};
    CHECK_THROWS_AS(mic_potential_ambient(origin, 1.0, 1.0, 1.0, 1.0), DomainError);

    double last = 0.0;
    for (double r = 0.1; r > 1e-6; r /= 3.0) {
        const std::array<double, 3> y{r, 0.0, 0.0};
        const double v = mic_potential_ambient(y, std::sqrt(1.0 + r * r), 0.0, 1.0, 1.0);
        if (r < 0.1) CHECK(v < last);
        last = v;
    }

    // against the Eq.-21 potential at the embedded KS image: constant offset -3 s^2/(2 r0^2)
    PointSampler s(73);
    for (int i = 0; i < 200; ++i) {
        const PhasePoint p = s.pair();
        const ReducedPoint red = ks_map(p);
        const double r0 = s.uniform(0.5, 2.0), gamma = s.uniform(0.0, 2.0), sc = s.uniform(-1.0, 1.0);
        const double u = red.u_norm();
        const double f = r0 / (1.0 - u * u);
        const std::array<double, 3> amb{2.0 * f * red.u[0], 2.0 * f * red.u[1], 2.0 * f * red.u[2]};
        const double x4 = f * (1.0 + u * u);
        const double reduced = (1 - u * u) * (1 - u * u) * sc * sc / (8 * r0 * r0 * u * u) -
                               (gamma / r0) * (1 + u * u) / (2 * u);
        CHECK(mic_potential_ambient(amb, x4, sc, gamma, r0) - reduced ==
              doctest::Approx(-1.5 * sc * sc / (r0 * r0)).epsilon(1e-9));
    }
}

TEST_CASE("ambient SU(2) Kepler potential") {
    const double r0 = 1.5, gamma = 0.8;
    const std::array<double, 5> x{0.3, -0.4, 0.5, 0.1, 0.2};
    double x2 = 0.0;
    for (double c : x) x2 += c * c;
    const double x6 = std::sqrt(r0 * r0 + x2);
    const double coul = -(gamma / r0) * x6 / (2.0 * std::sqrt(x2));
    CHECK(su2_potential_ambient(x, x6, 0.0, gamma, r0) == doctest::Approx(coul).epsilon(1e-14));

    // same shape as the MIC-Kepler potential with s^2 -> j(j+1) and half the Coulomb term
    const double j = 1.5;
    const double mic_like = (j * (j + 1) / (r0 * r0)) * (x6 * x6 / (2.0 * x2) - 2.0);
    CHECK(su2_potential_ambient(x, x6, j, gamma, r0) == doctest::Approx(mic_like + coul).epsilon(1e-14));

    // homogeneity of the monopole-like term
    const double lam = 2.7;
    std::array<double, 5> y{};
    for (int k = 0; k < 5; ++k) y[k] = lam * x[k];
    const double a = su2_potential_ambient(x, x6, j, 0.0, r0);
    const double b = su2_potential_ambient(y, lam * x6, j, 0.0, lam * r0);
    CHECK(b == doctest::Approx(a / (lam * lam)).epsilon(1e-13));
    CHECK_THROWS_AS(su2_potential_ambient(x, x6 + 0.1, j, gamma, r0), DomainError);
}
