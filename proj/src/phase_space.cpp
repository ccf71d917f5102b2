#include "stereodual/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stereodual {

PhasePoint::PhasePoint(std::vector<cplx> z_, std::vector<cplx> pi_) : z(std::move(z_)), pi(std::move(pi_)) {
    if (z.size() != pi.size() || z.empty() || z.size() > 2)
        throw std::invalid_argument("PhasePoint needs 1 or 2 (z, pi) pairs of equal length");
}

double PhasePoint::z_norm2() const noexcept {
    double s = 0.0;
    for (const cplx& c : z) s += std::norm(c);
    return s;
}

double PhasePoint::pi_norm2() const noexcept {
    double s = 0.0;
    for (const cplx& c : pi) s += std::norm(c);
    return s;
}

bool PhasePoint::finite() const noexcept {
    auto ok = [](const cplx& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); };
    return std::all_of(z.begin(), z.end(), ok) && std::all_of(pi.begin(), pi.end(), ok);
}

WirtingerGradient::WirtingerGradient(std::size_t n) : dz(n), dzb(n), dpi(n), dpib(n) {}

double WirtingerGradient::max_abs() const noexcept {
    double m = 0.0;
    for (const auto* v : {&dz, &dzb, &dpi, &dpib})
        for (const cplx& c : *v) m = std::max(m, std::abs(c));
    return m;
}

WirtingerGradient conjugate(const WirtingerGradient& g) {
    // conj(f) has d/dz = conj(df/dzbar) and d/dpi = conj(df/dpibar).
    WirtingerGradient out(g.n());
    for (std::size_t a = 0; a < g.n(); ++a) {
        out.dz[a] = std::conj(g.dzb[a]);
        out.dzb[a] = std::conj(g.dz[a]);
        out.dpi[a] = std::conj(g.dpib[a]);
        out.dpib[a] = std::conj(g.dpi[a]);
    }
    return out;
}

Observable conjugate(const Observable& f) {
    Observable out;
    out.name = "conj(" + f.name + ")";
    out.value = [v = f.value](const PhasePoint& p) { return std::conj(v(p)); };
    if (f.gradient)
        out.gradient = [g = f.gradient](const PhasePoint& p) { return conjugate(g(p)); };
    return out;
}

namespace {

double block_scale(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& c : v) s += std::norm(c);
    s = std::sqrt(s);
    return s > 0.0 ? s : 1.0;
}

// d f / d(real direction) of coordinate `slot` (component `a`, real or imaginary part).
cplx directional(const std::function<cplx(const PhasePoint&)>& f, const PhasePoint& p,
                 std::vector<cplx> PhasePoint::*block, std::size_t a, cplx dir, double h,
                 int order) {
    auto shifted = [&](double k) {
        PhasePoint q = p;
        (q.*block)[a] += k * h * dir;
        return f(q);
    };
    if (order == 4)
        return (-shifted(2.0) + 8.0 * shifted(1.0) - 8.0 * shifted(-1.0) + shifted(-2.0)) / (12.0 * h);
    return (shifted(1.0) - shifted(-1.0)) / (2.0 * h);
}

}  // namespace

WirtingerGradient fd_gradient(const std::function<cplx(const PhasePoint&)>& f, const PhasePoint& p,
                              const FiniteDifference& fd) {
    const std::size_t n = p.n();
    WirtingerGradient g(n);
    const double hz = fd.step_rel * block_scale(p.z);
    const double hp = fd.step_rel * block_scale(p.pi);
    const cplx I(0.0, 1.0);
    for (std::size_t a = 0; a < n; ++a) {
        const cplx fx = directional(f, p, &PhasePoint::z, a, 1.0, hz, fd.order);
        const cplx fy = directional(f, p, &PhasePoint::z, a, I, hz, fd.order);
        g.dz[a] = 0.5 * (fx - I * fy);
        g.dzb[a] = 0.5 * (fx + I * fy);
        const cplx px = directional(f, p, &PhasePoint::pi, a, 1.0, hp, fd.order);
        const cplx py = directional(f, p, &PhasePoint::pi, a, I, hp, fd.order);
        g.dpi[a] = 0.5 * (px - I * py);
        g.dpib[a] = 0.5 * (px + I * py);
    }
    return g;
}

cplx poisson_bracket(const WirtingerGradient& df, const WirtingerGradient& dg) {
    if (df.n() != dg.n()) throw std::invalid_argument("gradients of different dimension");
    cplx s = 0.0;
    for (std::size_t a = 0; a < df.n(); ++a) {
        s += df.dpi[a] * dg.dz[a] - df.dz[a] * dg.dpi[a];
        s += df.dpib[a] * dg.dzb[a] - df.dzb[a] * dg.dpib[a];
    }
    return s;
}

cplx poisson_bracket(const Observable& f, const Observable& g, const PhasePoint& p,
                     const BracketOptions& opts) {
    auto grad = [&](const Observable& o) {
        if (opts.source == GradientSource::analytic_if_available && o.gradient) return o.gradient(p);
        return fd_gradient(o.value, p, opts.fd);
    };
    return poisson_bracket(grad(f), grad(g));
}

namespace {

Observable coordinate(std::string name, std::size_t a, std::vector<cplx> PhasePoint::*block,
                      bool conj, std::vector<cplx> WirtingerGradient::*slot) {
    Observable o;
    o.name = std::move(name) + std::to_string(a + 1);
    o.value = [=](const PhasePoint& p) {
        const cplx v = (p.*block).at(a);
        return conj ? std::conj(v) : v;
    };
    o.gradient = [=](const PhasePoint& p) {
        WirtingerGradient g(p.n());
        (g.*slot).at(a) = 1.0;
        return g;
    };
    return o;
}

}  // namespace

Observable coordinate_z(std::size_t a) {
    return coordinate("z", a, &PhasePoint::z, false, &WirtingerGradient::dz);
}
Observable coordinate_zbar(std::size_t a) {
    return coordinate("zbar", a, &PhasePoint::z, true, &WirtingerGradient::dzb);
}
Observable coordinate_pi(std::size_t a) {
    return coordinate("pi", a, &PhasePoint::pi, false, &WirtingerGradient::dpi);
}
Observable coordinate_pibar(std::size_t a) {
    return coordinate("pibar", a, &PhasePoint::pi, true, &WirtingerGradient::dpib);
}

}  // namespace stereodual
