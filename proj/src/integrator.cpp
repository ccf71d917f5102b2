#include "stereodual/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint/stepper/controlled_runge_kutta.hpp>
#include <boost/numeric/odeint/stepper/generation.hpp>
#include <boost/numeric/odeint/stepper/runge_kutta_fehlberg78.hpp>

#include "stereodual/errors.hpp"
#include "stereodual/observables.hpp"

namespace stereodual {

namespace odeint = boost::numeric::odeint;

std::string_view to_string(SystemKind kind) {
    switch (kind) {
        case SystemKind::osc2d: return "osc2d";
        case SystemKind::coulomb2d: return "coulomb2d";
        case SystemKind::osc4d: return "osc4d";
    }
    return "unknown";
}

SystemKind system_from_string(std::string_view name) {
    if (name == "osc2d") return SystemKind::osc2d;
    if (name == "coulomb2d") return SystemKind::coulomb2d;
    if (name == "osc4d") return SystemKind::osc4d;
    throw std::invalid_argument("unknown system '" + std::string(name) + "'");
}

HamiltonianSystem::HamiltonianSystem(SystemKind kind, SpaceParams params)
    : kind_(kind), params_(params) {
    switch (kind_) {
        case SystemKind::osc2d:
            params_.validate();
            names_ = {"H", "J", "ReI", "ImI"};
            break;
        case SystemKind::coulomb2d:
            params_.validate_coulomb();
            names_ = {"H", "J", "ReA", "ImA"};
            break;
        case SystemKind::osc4d:
            params_.validate();
            names_ = {"H", "J"};
            break;
    }
}

double HamiltonianSystem::hamiltonian(const PhasePoint& p) const {
    return kind_ == SystemKind::coulomb2d ? coulomb_hamiltonian(p, params_) : osc_hamiltonian(p, params_);
}

WirtingerGradient HamiltonianSystem::gradient(const PhasePoint& p) const {
    return kind_ == SystemKind::coulomb2d ? coulomb_hamiltonian_gradient(p, params_)
                                          : osc_hamiltonian_gradient(p, params_);
}

std::vector<double> HamiltonianSystem::invariants(const PhasePoint& p) const {
    switch (kind_) {
        case SystemKind::osc2d: {
            const cplx I = hidden_invariant(p, params_);
            return {osc_hamiltonian(p, params_), u1_generator(p), I.real(), I.imag()};
        }
        case SystemKind::coulomb2d: {
            const cplx A = runge_lenz(p, params_);
            return {coulomb_hamiltonian(p, params_), u1_generator(p), A.real(), A.imag()};
        }
        case SystemKind::osc4d:
            return {osc_hamiltonian(p, params_), u1_generator(p)};
    }
    return {};
}

double HamiltonianSystem::singularity_margin(const PhasePoint& p) const {
    const double u = p.z_norm2();
    if (kind_ == SystemKind::coulomb2d) return std::min(std::sqrt(u), std::abs(1.0 - u));
    const double eps = params_.epsilon();
    // the equator (1 - eps u = 0) is singular only through the potential
    const double equator = params_.coupling > 0.0 ? std::abs(1.0 - eps * u) : HUGE_VAL;
    return std::min(equator, std::abs(1.0 + eps * u));
}

double HamiltonianSystem::kinetic_coefficient(const PhasePoint& p) const {
    const double u = p.z_norm2();
    const double r = params_.radius;
    const double f = kind_ == SystemKind::coulomb2d ? 1.0 - u : 1.0 + params_.epsilon() * u;
    return f * f / (2.0 * r * r);
}

namespace {

using State = std::vector<double>;

// Real, per-block rescaled view of a phase point; keeps both blocks O(1) so
// that one absolute/relative tolerance fits orbits of any size.
struct Packing {
    std::size_t n;
    double sz;
    double sp;

    State pack(const PhasePoint& p) const {
        State y(4 * n);
        for (std::size_t a = 0; a < n; ++a) {
            y[2 * a] = p.z[a].real() / sz;
            y[2 * a + 1] = p.z[a].imag() / sz;
            y[2 * n + 2 * a] = p.pi[a].real() / sp;
            y[2 * n + 2 * a + 1] = p.pi[a].imag() / sp;
        }
        return y;
    }

    PhasePoint unpack(const State& y) const {
        std::vector<cplx> z(n), pi(n);
        for (std::size_t a = 0; a < n; ++a) {
            z[a] = cplx(y[2 * a], y[2 * a + 1]) * sz;
            pi[a] = cplx(y[2 * n + 2 * a], y[2 * n + 2 * a + 1]) * sp;
        }
        return PhasePoint(std::move(z), std::move(pi));
    }
};

Packing make_packing(const PhasePoint& p0, const HamiltonianSystem& sys) {
    const double zn = std::sqrt(p0.z_norm2());
    const double pn = std::sqrt(p0.pi_norm2());
    // Momentum scale if all of |H| were kinetic.
    const double H = std::abs(sys.hamiltonian(p0));
    const double K = sys.kinetic_coefficient(p0);
    const double pk = K > 0.0 ? std::sqrt(H / K) : 0.0;
    double sz = zn > 0.0 ? zn : 1.0;
    double sp = std::max(pn, pk);
    if (!(sp > 0.0)) sp = 1.0;
    return {p0.n(), sz, sp};
}

struct Rhs {
    const HamiltonianSystem* sys;
    Packing pk;

    void operator()(const State& y, State& dydt, double /*t*/) const {
        const PhasePoint p = pk.unpack(y);
        WirtingerGradient g(pk.n);
        try {
            g = sys->gradient(p);
        } catch (const Error& e) {
            throw SingularityApproach(std::string("flow left the regular domain: ") + e.what());
        }
        const std::size_t n = pk.n;
        for (std::size_t a = 0; a < n; ++a) {
            const cplx zdot = g.dpi[a];
            const cplx pdot = -g.dz[a];
            dydt[2 * a] = zdot.real() / pk.sz;
            dydt[2 * a + 1] = zdot.imag() / pk.sz;
            dydt[2 * n + 2 * a] = pdot.real() / pk.sp;
            dydt[2 * n + 2 * a + 1] = pdot.imag() / pk.sp;
        }
    }
};

// Steps from 0 to T; `on_step(t, p)` runs after every accepted step.
void run_flow(const PhasePoint& p0, const HamiltonianSystem& sys, double T,
              const IntegratorOptions& opts,
              const std::function<void(double, const PhasePoint&)>& on_step) {
    if (p0.n() != sys.n()) throw std::invalid_argument("phase point dimension does not match the system");
    if (!(T > 0.0)) throw std::invalid_argument("integration time must be positive");
    if (!(opts.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (sys.singularity_margin(p0) < opts.guard)
        throw SingularityApproach("initial point lies inside the singularity guard zone");

    const Packing pk = make_packing(p0, sys);
    const Rhs rhs{&sys, pk};
    auto stepper = odeint::make_controlled<odeint::runge_kutta_fehlberg78<State>>(opts.tol, opts.tol);

    State y = pk.pack(p0);
    double t = 0.0;
    double dt = T * 1e-4;
    const double dt_min = opts.min_step_rel * T;
    std::size_t steps = 0;

    while (t < T) {
        if (t + dt > T) dt = T - t;
        if (dt < dt_min && T - t > dt_min)
            throw StepFailure("step size underflow at t = " + std::to_string(t));
        if (++steps > opts.max_steps)
            throw StepFailure("step budget of " + std::to_string(opts.max_steps) + " exhausted");

        const double t_before = t;
        if (stepper.try_step(rhs, y, t, dt) != odeint::success) continue;
        if (T - t < 1e-14 * T) t = T;

        const PhasePoint p = pk.unpack(y);
        if (sys.singularity_margin(p) < opts.guard)
            throw SingularityApproach("trajectory entered the guard zone at t = " + std::to_string(t));
        if (on_step) on_step(t, p);
        if (t - t_before <= 0.0) throw StepFailure("time did not advance");
    }
}

}  // namespace

Trajectory integrate(const PhasePoint& p0, const HamiltonianSystem& system, double T,
                     const IntegratorOptions& opts) {
    Trajectory tr;
    tr.invariant_names = system.invariant_names();
    tr.times.push_back(0.0);
    tr.states.push_back(p0);
    tr.invariant_log.push_back(system.invariants(p0));
    run_flow(p0, system, T, opts, [&](double t, const PhasePoint& p) {
        tr.times.push_back(t);
        tr.states.push_back(p);
        tr.invariant_log.push_back(system.invariants(p));
    });
    return tr;
}

PhasePoint propagate(const PhasePoint& p0, const HamiltonianSystem& system, double dt,
                     const IntegratorOptions& opts) {
    if (dt == 0.0) return p0;
    PhasePoint last = p0;
    run_flow(p0, system, dt, opts, [&](double, const PhasePoint& p) { last = p; });
    return last;
}

std::vector<Drift> drift_report(const Trajectory& t) {
    if (t.empty()) throw std::invalid_argument("drift_report needs a non-empty trajectory");
    std::vector<Drift> out;
    const auto& first = t.invariant_log.front();
    for (std::size_t k = 0; k < t.invariant_names.size(); ++k) {
        const double f0 = first[k];
        const double scale = std::max(1.0, std::abs(f0));
        double m = 0.0;
        for (const auto& row : t.invariant_log) m = std::max(m, std::abs(row[k] - f0) / scale);
        out.push_back({t.invariant_names[k], m});
    }
    return out;
}

double measure_period(const PhasePoint& p0, const HamiltonianSystem& system, double t_max,
                      const IntegratorOptions& opts) {
    std::vector<double> crossings;
    double t_prev = 0.0;
    PhasePoint p_prev = p0;
    auto refine = [&](double t0, const PhasePoint& a, double t1) {
        auto g = [&](double tau) { return propagate(a, system, tau, opts).z[0].real(); };
        boost::uintmax_t iters = 100;
        const auto r = boost::math::tools::toms748_solve(
            g, 0.0, t1 - t0, boost::math::tools::eps_tolerance<double>(48), iters);
        return t0 + 0.5 * (r.first + r.second);
    };

    try {
        run_flow(p0, system, t_max, opts, [&](double t, const PhasePoint& p) {
            if (crossings.size() < 2 && p_prev.z[0].real() < 0.0 && p.z[0].real() >= 0.0)
                crossings.push_back(refine(t_prev, p_prev, t));
            t_prev = t;
            p_prev = p;
            if (crossings.size() == 2) throw std::out_of_range("done");
        });
    } catch (const std::out_of_range&) {
    }
    if (crossings.size() < 2)
        throw StepFailure("fewer than two upward crossings of Re z = 0 before t_max");
    return crossings[1] - crossings[0];
}

namespace {

void put(std::ostream& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const Trajectory& t) {
    const std::size_t n = t.states.empty() ? 1 : t.states.front().n();
    auto idx = [n](const char* base, std::size_t a) {
        return n == 1 ? std::string(base) : std::string(base) + std::to_string(a + 1);
    };
    out << "t";
    for (std::size_t a = 0; a < n; ++a) out << ",Re_" << idx("z", a);
    for (std::size_t a = 0; a < n; ++a) out << ",Im_" << idx("z", a);
    for (std::size_t a = 0; a < n; ++a) out << ",Re_" << idx("pi", a);
    for (std::size_t a = 0; a < n; ++a) out << ",Im_" << idx("pi", a);
    for (const auto& name : t.invariant_names) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < t.size(); ++i) {
        const PhasePoint& p = t.states[i];
        put(out, t.times[i]);
        for (const cplx& c : p.z) out << ',', put(out, c.real());
        for (const cplx& c : p.z) out << ',', put(out, c.imag());
        for (const cplx& c : p.pi) out << ',', put(out, c.real());
        for (const cplx& c : p.pi) out << ',', put(out, c.imag());
        for (double v : t.invariant_log[i]) out << ',', put(out, v);
        out << '\n';
    }
}

}  // namespace stereodual
