#include "doctest.h"

#include <cmath>
#include <random>

#include "stereodual/errors.hpp"
#include "stereodual/geometry.hpp"

using namespace stereodual;

TEST_CASE("stereo_to_ambient hand values") {
    const auto sphere = SpaceParams::oscillator(Curvature::sphere, 1.0, 1.0);
    const auto pseudo = SpaceParams::oscillator(Curvature::pseudosphere, 1.0, 1.0);

    auto a = stereo_to_ambient(cplx(0.0), sphere);
    CHECK(a.x[0] == 0.0);
    CHECK(a.x[1] == 0.0);
    CHECK(a.x_last == 1.0);

    a = stereo_to_ambient(cplx(1.0), sphere);
    CHECK(a.x[0] == doctest::Approx(1.0));
    CHECK(a.x[1] == 0.0);
    CHECK(a.x_last == 0.0);

    a = stereo_to_ambient(cplx(0.5), pseudo);
    CHECK(a.x[0] == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(a.x_last == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
    CHECK(-a.x_squared() + a.x_last * a.x_last == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("pseudosphere boundary is rejected") {
    const auto pseudo = SpaceParams::oscillator(Curvature::pseudosphere, 1.0, 1.0);
    CHECK_THROWS_AS(stereo_to_ambient(cplx(1.0), pseudo), BoundaryError);
    CHECK_THROWS_AS(stereo_to_ambient(std::polar(1.0 + 1e-11, 0.3), pseudo), BoundaryError);
    CHECK_THROWS_AS(metric_conformal_factor(cplx(0.0, 1.0), pseudo), BoundaryError);
    // both sheets are representable
    CHECK_NOTHROW(stereo_to_ambient(cplx(2.0), pseudo));
    CHECK(stereo_to_ambient(cplx(2.0), pseudo).x_last < 0.0);
}

TEST_CASE("ambient constraint holds on random points") {
    // disk |z| <= 0.8 and its image under inversion (the other sheet/hemisphere)
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> r2(0.0, 0.64), phase(0.0, 6.283185307179586);
    for (Curvature c : {Curvature::sphere, Curvature::pseudosphere}) {
        const auto params = SpaceParams::oscillator(c, 2.5, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            cplx z = std::polar(std::sqrt(r2(rng)), phase(rng));
            if (i % 2 == 1 && z != cplx(0.0)) z = inversion(z);
            worst = std::max(worst, std::abs(stereo_to_ambient(z, params).constraint_residual(params)));
        }
        CHECK(worst < 1e-12);
    }
    // complex pair and real 3-vector variants
    const auto p4 = SpaceParams::oscillator(Curvature::pseudosphere, 1.3, 1.0, 4);
    const cplx pair[2] = {cplx(0.2, -0.1), cplx(0.3, 0.4)};
    CHECK(std::abs(stereo_to_ambient(std::span<const cplx>(pair), p4).constraint_residual(p4)) < 1e-12);
    const double u3[3] = {0.1, -0.5, 0.3};
    const auto p3 = SpaceParams::oscillator(Curvature::pseudosphere, 0.7, 1.0, 3);
    CHECK(std::abs(stereo_to_ambient(std::span<const double>(u3), p3).constraint_residual(p3)) < 1e-12);
}

TEST_CASE("metric_conformal_factor hand values") {
    const auto sphere = SpaceParams::oscillator(Curvature::sphere, 1.0, 1.0);
    const auto pseudo = SpaceParams::oscillator(Curvature::pseudosphere, 1.0, 1.0);
    CHECK(metric_conformal_factor(cplx(0.0), sphere) == 4.0);
    CHECK(metric_conformal_factor(cplx(0.0), pseudo) == 4.0);
    CHECK(metric_conformal_factor(cplx(1.0), sphere) == doctest::Approx(1.0));
    const auto pseudo2 = SpaceParams::oscillator(Curvature::pseudosphere, 2.0, 1.0);
    CHECK(metric_conformal_factor(cplx(0.5), pseudo2) == doctest::Approx(256.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("metric factor matches the pullback of the ambient metric") {
    // induced line element: dx^2 + eps dx_last^2
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-0.9, 0.9), phase(0.0, 6.283185307179586);
    const double h = 1e-5;
    for (Curvature c : {Curvature::sphere, Curvature::pseudosphere}) {
        const auto params = SpaceParams::oscillator(c, 1.7, 1.0);
        const double eps = params.epsilon();
        for (int i = 0; i < 200; ++i) {
            const cplx z(U(rng), U(rng));
            if (std::norm(z) > 0.8) continue;
            const cplx dz = std::polar(h, phase(rng));
            const auto a = stereo_to_ambient(z - 0.5 * dz, params);
            const auto b = stereo_to_ambient(z + 0.5 * dz, params);
            double ds2 = 0.0;
            for (std::size_t k = 0; k < a.x.size(); ++k) ds2 += (b.x[k] - a.x[k]) * (b.x[k] - a.x[k]);
            ds2 += eps * (b.x_last - a.x_last) * (b.x_last - a.x_last);
            const double expect = metric_conformal_factor(z, params) * std::norm(dz);
            CHECK(std::abs(ds2 - expect) / expect < 1e-6);
        }
    }
}

TEST_CASE("inversion") {
    CHECK(inversion(cplx(2.0)) == cplx(0.5));
    const cplx r = inversion(cplx(0.0, 1.0));
    CHECK(r.real() == doctest::Approx(0.0));
    CHECK(r.imag() == doctest::Approx(-1.0));
    CHECK_THROWS_AS(inversion(cplx(0.0)), DomainError);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(-4.0, 4.0);
    for (int i = 0; i < 100; ++i) {
        const cplx z(U(rng), U(rng));
        CHECK(std::abs(inversion(inversion(z)) - z) < 1e-14 * std::max(1.0, std::abs(z)));
        if (std::abs(z) < 1.0) CHECK(std::abs(inversion(z)) > 1.0);
        if (std::abs(z) > 1.0) CHECK(std::abs(inversion(z)) < 1.0);
    }
}

TEST_CASE("SpaceParams validation") {
    CHECK_THROWS_AS(SpaceParams::oscillator(Curvature::sphere, -1.0, 1.0), DomainError);
    CHECK_THROWS_AS(SpaceParams::oscillator(Curvature::sphere, 1.0, 1.0, 5), DomainError);
    SpaceParams p{Curvature::sphere, 1.0, 1.0, 2};
    CHECK_THROWS_AS(p.validate_coulomb(), DomainError);
    CHECK(SpaceParams::coulomb(2.0, 1.0).epsilon() == -1.0);
}
