#include "stereodual/duality.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "stereodual/constants.hpp"
#include "stereodual/errors.hpp"
#include "stereodual/observables.hpp"

namespace stereodual {

namespace {

void put(std::ostream& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}

DualityRecord exchange_params(double E, const SpaceParams& osc) {
    osc.validate();
    DualityRecord r;
    r.E = E;
    r.alpha = osc.coupling;
    r.epsilon = osc.epsilon();
    r.R0 = osc.radius;
    r.r0 = osc.radius * osc.radius;
    r.gamma = E / 2.0;
    r.E_C = -0.5 * (r.alpha * r.alpha + r.epsilon * E / r.r0);
    return r;
}

void check_level(const PhasePoint& p, const SpaceParams& osc, double E, double tol, const char* what) {
    const double H = osc_hamiltonian(p, osc);
    if (std::abs(H - E) > tol * std::max(1.0, std::abs(E)))
        throw PreconditionError(std::string(what) + ": point is not on the energy surface H = " +
                                std::to_string(E) + " (H = " + std::to_string(H) + ")");
}

}  // namespace

// ---------------------------------------------------------------- Bohlin --

PhasePoint bohlin_map(const PhasePoint& p) {
    if (p.n() != 1) throw std::invalid_argument("bohlin_map needs a planar point");
    const cplx z = p.z[0];
    if (z == cplx(0.0)) throw DomainError("bohlin_map is undefined at z = 0");
    return PhasePoint::planar(z * z, p.pi[0] / (2.0 * z));
}

DualityRecord bohlin_params(double E, const SpaceParams& oscillator) {
    if (oscillator.dim != 2) throw std::invalid_argument("bohlin_params needs a two-dimensional oscillator");
    return exchange_params(E, oscillator);
}

double bohlin_surface_check(const PhasePoint& p, const SpaceParams& oscillator, double E, double level_tol) {
    check_level(p, oscillator, E, level_tol, "bohlin_surface_check");
    const DualityRecord rec = bohlin_params(E, oscillator);
    const PhasePoint image = bohlin_map(p);
    return std::abs(coulomb_hamiltonian(image, rec.coulomb_params()) - rec.E_C);
}

ConstantsMapResidual bohlin_constants_map(const PhasePoint& p, const SpaceParams& oscillator) {
    const double E = osc_hamiltonian(p, oscillator);
    const DualityRecord rec = bohlin_params(E, oscillator);
    const PhasePoint image = bohlin_map(p);
    const double J = u1_generator(p);
    const double JC = u1_generator(image);
    const cplx I = hidden_invariant(p, oscillator);
    const cplx A = runge_lenz(image, rec.coulomb_params());
    return {std::abs(J - 2.0 * JC), std::abs(I - 2.0 * A)};
}

std::array<double, 4> to_real(const PhasePoint& p) {
    return {p.z[0].real(), p.z[0].imag(), p.pi[0].real(), p.pi[0].imag()};
}

PhasePoint from_real(const std::array<double, 4>& x) {
    return PhasePoint::planar(cplx(x[0], x[1]), cplx(x[2], x[3]));
}

std::array<std::array<double, 4>, 4> symplectic_matrix() {
    // omega = 2 (dpi_r ^ dz_r - dpi_i ^ dz_i) in (z_r, z_i, pi_r, pi_i)
    std::array<std::array<double, 4>, 4> W{};
    W[2][0] = 2.0;
    W[0][2] = -2.0;
    W[3][1] = -2.0;
    W[1][3] = 2.0;
    return W;
}

double bohlin_canonicity_residual(const PhasePoint& p, double step_rel) {
    const std::array<double, 4> x0 = to_real(p);
    const double hz = step_rel * std::max(std::abs(p.z[0]), 1e-300);
    const double hp = step_rel * (std::abs(p.pi[0]) > 0.0 ? std::abs(p.pi[0]) : 1.0);

    double J[4][4];
    for (int j = 0; j < 4; ++j) {
        const double h = j < 2 ? hz : hp;
        auto image = [&](double k) {
            auto x = x0;
            x[j] += k * h;
            return to_real(bohlin_map(from_real(x)));
        };
        const auto a = image(2.0), b = image(1.0), c = image(-1.0), d = image(-2.0);
        for (int i = 0; i < 4; ++i) J[i][j] = (-a[i] + 8.0 * b[i] - 8.0 * c[i] + d[i]) / (12.0 * h);
    }

    const auto W = symplectic_matrix();
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) s += J[k][i] * W[k][l] * J[l][j];
            worst = std::max(worst, std::abs(s - W[i][j]));
        }
    return worst;
}

void write_duality_record_csv(std::ostream& out, const DualityRecord& rec) {
    out << "E,alpha,epsilon,R0,r0,gamma,E_C\n";
    const double row[] = {rec.E, rec.alpha, rec.epsilon, rec.R0, rec.r0, rec.gamma, rec.E_C};
    for (std::size_t i = 0; i < std::size(row); ++i) {
        if (i) out << ',';
        put(out, row[i]);
    }
    out << '\n';
}

// --------------------------------------------------- Kustaanheimo-Stiefel --

namespace {

using Pauli = std::array<std::array<cplx, 2>, 2>;

const std::array<Pauli, 3>& pauli() {
    static const std::array<Pauli, 3> s = {{
        {{{0.0, 1.0}, {1.0, 0.0}}},
        {{{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}}},
        {{{1.0, 0.0}, {0.0, -1.0}}},
    }};
    return s;
}

void require_pair(const PhasePoint& p) {
    if (p.n() != 2) throw std::invalid_argument("KS map needs a complex pair");
    if (p.z_norm2() == 0.0) throw DomainError("KS map is undefined at z = 0");
}

// z sigma_k v for row vector z and column vector v
cplx sandwich(const std::vector<cplx>& left, const Pauli& s, const std::vector<cplx>& right) {
    cplx r = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) r += left[a] * s[a][b] * right[b];
    return r;
}

std::vector<cplx> conj_of(const std::vector<cplx>& v) { return {std::conj(v[0]), std::conj(v[1])}; }

double ks_u(const PhasePoint& p, int k) {
    return sandwich(p.z, pauli()[k], conj_of(p.z)).real();
}

double ks_p(const PhasePoint& p, int k) {
    const cplx N = sandwich(p.z, pauli()[k], p.pi) + sandwich(conj_of(p.pi), pauli()[k], conj_of(p.z));
    return N.real() / (2.0 * p.z_norm2());
}

}  // namespace

double ReducedPoint::u_norm() const noexcept { return std::hypot(u[0], u[1], u[2]); }

double ReducedPoint::p_norm2() const noexcept { return p[0] * p[0] + p[1] * p[1] + p[2] * p[2]; }

ReducedPoint ks_map(const PhasePoint& p) {
    require_pair(p);
    ReducedPoint r;
    for (int k = 0; k < 3; ++k) {
        r.u[k] = ks_u(p, k);
        r.p[k] = ks_p(p, k);
    }
    r.s = 0.5 * u1_generator(p);
    return r;
}

Observable ks_u_observable(int k) {
    if (k < 0 || k > 2) throw std::out_of_range("KS component index");
    Observable o;
    o.name = "u" + std::to_string(k + 1);
    o.value = [k](const PhasePoint& p) {
        require_pair(p);
        return cplx(ks_u(p, k));
    };
    o.gradient = [k](const PhasePoint& p) {
        require_pair(p);
        const Pauli& s = pauli()[k];
        WirtingerGradient g(2);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                g.dz[a] += s[a][b] * std::conj(p.z[b]);
                g.dzb[b] += p.z[a] * s[a][b];
            }
        return g;
    };
    return o;
}

Observable ks_p_observable(int k) {
    if (k < 0 || k > 2) throw std::out_of_range("KS component index");
    Observable o;
    o.name = "p" + std::to_string(k + 1);
    o.value = [k](const PhasePoint& p) {
        require_pair(p);
        return cplx(ks_p(p, k));
    };
    o.gradient = [k](const PhasePoint& p) {
        require_pair(p);
        const Pauli& s = pauli()[k];
        const double D = p.z_norm2();
        const std::vector<cplx> zb = conj_of(p.z);
        const std::vector<cplx> pb = conj_of(p.pi);
        const cplx N = sandwich(p.z, s, p.pi) + sandwich(pb, s, zb);
        WirtingerGradient g(2);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                g.dz[a] += s[a][b] * p.pi[b] / (2.0 * D);
                g.dzb[b] += pb[a] * s[a][b] / (2.0 * D);
                g.dpi[b] += p.z[a] * s[a][b] / (2.0 * D);
                g.dpib[a] += s[a][b] * zb[b] / (2.0 * D);
            }
        for (int a = 0; a < 2; ++a) {
            g.dz[a] -= N * zb[a] / (2.0 * D * D);
            g.dzb[a] -= N * p.z[a] / (2.0 * D * D);
        }
        return g;
    };
    return o;
}

double ReducedBracketResidual::max() const noexcept { return std::max({uu, pu, pp}); }

ReducedBracketResidual reduced_bracket_check(const PhasePoint& p, const BracketOptions& opts) {
    const ReducedPoint r = ks_map(p);
    auto grad = [&](const Observable& o) {
        if (opts.source == GradientSource::analytic_if_available) return o.gradient(p);
        return fd_gradient(o.value, p, opts.fd);
    };
    std::array<WirtingerGradient, 3> du, dp;
    for (int k = 0; k < 3; ++k) {
        du[k] = grad(ks_u_observable(k));
        dp[k] = grad(ks_p_observable(k));
    }

    const double un = r.u_norm();
    const double u3 = un * un * un;
    const double pp_scale = std::max(1.0, std::abs(r.s) / (un * un));
    ReducedBracketResidual res;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            res.uu = std::max(res.uu, std::abs(poisson_bracket(du[i], du[j])));
            const double delta = i == j ? 1.0 : 0.0;
            res.pu = std::max(res.pu, std::abs(poisson_bracket(dp[i], du[j]) - delta));
            double expected = 0.0;
            for (int k = 0; k < 3; ++k) {
                // Levi-Civita symbol
                const int e = (i - j) * (j - k) * (k - i) / 2;
                expected += e * r.u[k];
            }
            expected *= kMonopoleBracketConstant * r.s / u3;
            res.pp = std::max(res.pp, std::abs(poisson_bracket(dp[i], dp[j]) - expected) / pp_scale);
        }
    return res;
}

double measure_monopole_constant(const PhasePoint& p) {
    const ReducedPoint r = ks_map(p);
    const FiniteDifference fd{1e-3, 4};
    const cplx b = poisson_bracket(fd_gradient(ks_p_observable(0).value, p, fd),
                                   fd_gradient(ks_p_observable(1).value, p, fd));
    const double un = r.u_norm();
    return b.real() * un * un * un / (r.s * r.u[2]);
}

double mic_surface_check(const PhasePoint& p, const SpaceParams& oscillator, double E, double level_tol) {
    if (p.n() != 2) throw std::invalid_argument("mic_surface_check needs a complex pair");
    check_level(p, oscillator, E, level_tol, "mic_surface_check");
    const DualityRecord rec = exchange_params(E, oscillator);
    const ReducedPoint r = ks_map(p);
    const double un = r.u_norm();
    const double u2 = un * un;
    const double lhs = (1.0 - u2) * (1.0 - u2) / (8.0 * rec.r0 * rec.r0) * (r.p_norm2() + r.s * r.s / u2) -
                       (rec.gamma / rec.r0) * (1.0 + u2) / (2.0 * un);
    return std::abs(lhs - rec.E_C);
}

namespace {

template <std::size_t D>
double checked_norm(std::span<const double, D> x, double x_last, double r0, double tol, const char* what) {
    if (!(r0 > 0.0)) throw DomainError(std::string(what) + ": r0 must be positive");
    double x2 = 0.0;
    for (double v : x) x2 += v * v;
    if (x2 == 0.0) throw DomainError(std::string(what) + ": x = 0");
    if (std::abs(x_last * x_last - x2 - r0 * r0) > tol * r0 * r0)
        throw DomainError(std::string(what) + ": point is not on the pseudosphere of radius " +
                          std::to_string(r0));
    return x2;
}

}  // namespace

double mic_potential_ambient(std::span<const double, 3> x, double x4, double s, double gamma, double r0,
                             double tol) {
    const double x2 = checked_norm(x, x4, r0, tol, "mic_potential_ambient");
    return (s * s / (r0 * r0)) * (x4 * x4 / (2.0 * x2) - 2.0) - (gamma / r0) * x4 / std::sqrt(x2);
}

double su2_potential_ambient(std::span<const double, 5> x, double x6, double j, double gamma, double r0,
                             double tol) {
    const double x2 = checked_norm(x, x6, r0, tol, "su2_potential_ambient");
    return (j * (j + 1.0) / (r0 * r0)) * (x6 * x6 / (2.0 * x2) - 2.0) -
           (gamma / r0) * x6 / (2.0 * std::sqrt(x2));
}

ReducedTrajectory push_forward_ks(const Trajectory& t) {
    ReducedTrajectory out;
    out.times = t.times;
    out.points.reserve(t.states.size());
    for (const PhasePoint& p : t.states) out.points.push_back(ks_map(p));
    return out;
}

void write_reduced_csv(std::ostream& out, const ReducedTrajectory& t) {
    out << "t,u1,u2,u3,p1,p2,p3,s\n";
    for (std::size_t i = 0; i < t.times.size(); ++i) {
        const ReducedPoint& r = t.points[i];
        put(out, t.times[i]);
        for (double v : r.u) out << ',', put(out, v);
        for (double v : r.p) out << ',', put(out, v);
        out << ',';
        put(out, r.s);
        out << '\n';
    }
}

}  // namespace stereodual
