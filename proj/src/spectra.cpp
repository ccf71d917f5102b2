#include "stereodual/spectra.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "stereodual/errors.hpp"

namespace stereodual {

int nudged_floor(double x) { return static_cast<int>(std::floor(x + kFloorNudge)); }

double tilde_alpha(const SpaceParams& osc) {
    const double R2 = osc.radius * osc.radius;
    return std::sqrt(osc.coupling * osc.coupling + 1.0 / (4.0 * R2 * R2));
}

namespace {

int eps_int(Curvature c) { return c == Curvature::sphere ? 1 : -1; }

void require_nonnegative(int v, const char* name) {
    if (v < 0) throw QuantumNumberError(std::string(name) + " must be nonnegative, got " + std::to_string(v));
}

void require_bounded(const LevelCutoff& cut, int n, const std::string& what) {
    if (cut.kind == LevelCutoff::Kind::empty)
        throw RangeError(what + ": the spectrum is empty for these parameters");
    if (!cut.admits(n))
        throw RangeError(what + ": level " + std::to_string(n) + " exceeds the cutoff " +
                         std::to_string(cut.n_max));
}

// Closed form of the reduced Coulomb levels, no cutoff applied.
double coulomb_energy(double gamma, double r0, HalfInt N_sigma) {
    const double N = N_sigma.value();
    return -N * (N + 1.0) / (2.0 * r0 * r0) - gamma * gamma / (2.0 * (N + 0.5) * (N + 0.5));
}

void check_coulomb_couplings(double gamma, double r0) {
    if (!(r0 > 0.0)) throw DomainError("r0 must be positive");
    if (!(gamma >= 0.0)) throw DomainError("gamma must be nonnegative");
}

}  // namespace

// ---------------------------------------------------------------- 2D oscillator

LevelCutoff osc_nmax_2d(const SpaceParams& osc) {
    osc.validate();
    if (osc.curvature == Curvature::sphere) return LevelCutoff::unbounded();
    return LevelCutoff::bounded(nudged_floor(2.0 * tilde_alpha(osc) * osc.radius * osc.radius) - 1);
}

double osc_spectrum_2d(const SpaceParams& osc, int N) {
    require_nonnegative(N, "N");
    require_bounded(osc_nmax_2d(osc), N, "osc_spectrum_2d");
    const double n1 = N + 1.0;
    return tilde_alpha(osc) * n1 + osc.epsilon() * n1 * n1 / (2.0 * osc.radius * osc.radius);
}

std::vector<SpectrumLine> osc_tower_2d(const SpaceParams& osc, int n_limit) {
    const LevelCutoff cut = osc_nmax_2d(osc);
    const int top = cut.kind == LevelCutoff::Kind::bounded ? cut.n_max : n_limit;
    std::vector<SpectrumLine> out;
    for (int N = 0; N <= top; ++N) {
        long count = 0;
        for (int n_r = 0; 2 * n_r <= N; ++n_r) count += (N - 2 * n_r == 0) ? 1 : 2;  // M = +-(N - 2 n_r)
        SpectrumLine l;
        l.system = "osc2d";
        l.epsilon = eps_int(osc.curvature);
        l.quantum_numbers = {{"N", HalfInt::from_int(N)}};
        l.energy = osc_spectrum_2d(osc, N);
        l.degeneracy = count;
        out.push_back(std::move(l));
    }
    return out;
}

// ---------------------------------------------------------------- 2D Coulomb

LevelCutoff coulomb_nmax(double gamma, double r0, Z2Sector sector) {
    check_coulomb_couplings(gamma, r0);
    const double arg = std::sqrt(r0 * gamma) - (0.5 + sigma(sector).value());
    const int n = nudged_floor(arg);
    return n < 0 ? LevelCutoff::empty() : LevelCutoff::bounded(n);
}

SpectrumLine coulomb_spectrum_2d(double gamma, double r0, Z2Sector sector, int n_r, HalfInt m) {
    require_nonnegative(n_r, "n_r");
    const HalfInt sig = sigma(sector);
    const HalfInt shifted = m.abs() - sig;
    if (shifted.twice() < 0 || !shifted.is_integer())
        throw QuantumNumberError("|m| - sigma must be a nonnegative integer (m = " + m.str() +
                                 ", sigma = " + sig.str() + ")");
    const HalfInt N_sigma = HalfInt::from_int(n_r) + m.abs();
    const int index = (N_sigma - sig).twice() / 2;
    require_bounded(coulomb_nmax(gamma, r0, sector), index, "coulomb_spectrum_2d");

    SpectrumLine l;
    l.system = "coulomb2d";
    l.epsilon = -1;
    l.quantum_numbers = {{"sigma", sig}, {"N_sigma", N_sigma}, {"n_r", HalfInt::from_int(n_r)}, {"m_sigma", m}};
    l.energy = coulomb_energy(gamma, r0, N_sigma);
    l.degeneracy = N_sigma.twice() + 1;  // 2 N_sigma + 1 values of m_sigma = M/2
    return l;
}

std::vector<SpectrumLine> coulomb_tower_2d(double gamma, double r0, Z2Sector sector) {
    const LevelCutoff cut = coulomb_nmax(gamma, r0, sector);
    std::vector<SpectrumLine> out;
    if (cut.kind != LevelCutoff::Kind::bounded) return out;
    const HalfInt sig = sigma(sector);
    for (int idx = 0; idx <= cut.n_max; ++idx) {
        const HalfInt N_sigma = HalfInt::from_int(idx) + sig;
        SpectrumLine l = coulomb_spectrum_2d(gamma, r0, sector, 0, N_sigma);
        // enumerate (n_r, M) with 2 n_r + |M| = 2 N_sigma
        const int N = N_sigma.twice();
        long count = 0;
        for (int M = -N; M <= N; M += 2) ++count;
        l.degeneracy = count;
        l.quantum_numbers = {{"sigma", sig}, {"N_sigma", N_sigma}};
        out.push_back(std::move(l));
    }
    return out;
}

double interrelation_residual(int N, const SpaceParams& osc, Z2Sector sector) {
    require_nonnegative(N, "N");
    if (N % 2 != sigma(sector).twice())
        throw QuantumNumberError("level N = " + std::to_string(N) + " does not belong to sector sigma = " +
                                 sigma(sector).str());
    const double E = osc_spectrum_2d(osc, N);
    const double r0 = osc.radius * osc.radius;
    const double gamma = E / 2.0;
    const double eps = osc.epsilon();
    const double E_C = coulomb_energy(gamma, r0, HalfInt::from_twice(N));
    const double n1 = N + 1.0;
    const double rhs = 2.0 * gamma / n1 - eps * n1 / (2.0 * r0);
    if (rhs < 0.0) throw PositivityViolation("level N = " + std::to_string(N) + " does not map");
    const double radicand = 1.0 / (4.0 * r0 * r0) - eps * 2.0 * gamma / r0 - 2.0 * E_C;
    return std::abs(std::sqrt(std::max(radicand, 0.0)) - rhs);
}

double interrelation_residual(int N, double gamma, double r0, Curvature parent, Z2Sector sector) {
    require_nonnegative(N, "N");
    check_coulomb_couplings(gamma, r0);
    if (N % 2 != sigma(sector).twice())
        throw QuantumNumberError("level N = " + std::to_string(N) + " does not belong to sector sigma = " +
                                 sigma(sector).str());
    const double eps = sign(parent);
    const double n1 = N + 1.0;
    const double rhs = 2.0 * gamma / n1 - eps * n1 / (2.0 * r0);
    if (rhs < 0.0)
        throw PositivityViolation("level N = " + std::to_string(N) + " has negative right-hand side " +
                                  std::to_string(rhs));
    const double E_C = coulomb_energy(gamma, r0, HalfInt::from_twice(N));
    const double radicand = 1.0 / (4.0 * r0 * r0) - eps * 2.0 * gamma / r0 - 2.0 * E_C;
    return std::abs(std::sqrt(std::max(radicand, 0.0)) - rhs);
}

// ---------------------------------------------------------------- 4D oscillator

LevelCutoff osc_nmax_4d(const SpaceParams& osc) {
    osc.validate();
    if (osc.curvature == Curvature::sphere) return LevelCutoff::unbounded();
    const double x = tilde_alpha(osc) * osc.radius * osc.radius;
    return LevelCutoff::bounded(nudged_floor(x * (1.0 + std::sqrt(1.0 + 2.0 / (x * x)))) - 2);
}

double osc_spectrum_4d(const SpaceParams& osc, int N) {
    require_nonnegative(N, "N");
    require_bounded(osc_nmax_4d(osc), N, "osc_spectrum_4d");
    const double n2 = N + 2.0;
    return tilde_alpha(osc) * n2 + osc.epsilon() * (n2 * n2 - 2.0) / (2.0 * osc.radius * osc.radius);
}

double osc_spectrum_4d(const SpaceParams& osc, int n_r, int L, HalfInt s) {
    require_nonnegative(n_r, "n_r");
    if (s.abs().twice() > std::abs(L))
        throw QuantumNumberError("2|s| must not exceed |L| (s = " + s.str() + ", L = " + std::to_string(L) + ")");
    return osc_spectrum_4d(osc, 2 * n_r + std::abs(L));
}

std::vector<SpectrumLine> osc_tower_4d(const SpaceParams& osc, int n_limit) {
    const LevelCutoff cut = osc_nmax_4d(osc);
    const int top = cut.kind == LevelCutoff::Kind::bounded ? cut.n_max : n_limit;
    std::vector<SpectrumLine> out;
    for (int N = 0; N <= top; ++N) {
        long count = 0;
        for (int a = 0; a <= N; ++a)
            for (int b = 0; a + b <= N; ++b)
                for (int c = 0; a + b + c <= N; ++c) ++count;  // fourth occupation is fixed
        SpectrumLine l;
        l.system = "osc4d";
        l.epsilon = eps_int(osc.curvature);
        l.quantum_numbers = {{"N", HalfInt::from_int(N)}};
        l.energy = osc_spectrum_4d(osc, N);
        l.degeneracy = count;
        out.push_back(std::move(l));
    }
    return out;
}

// ---------------------------------------------------------------- MIC-Kepler

DegeneracyReport mic_degeneracy(int k, HalfInt s) {
    require_nonnegative(k, "k");
    DegeneracyReport r;
    const HalfInt top = HalfInt::from_int(k) + s.abs();
    for (HalfInt l = s.abs(); l <= top; l = l + HalfInt::from_int(1)) r.enumerated += l.twice() + 1;
    r.paper_formula = k * (k + s.abs().value() - 1.0);
    return r;
}

LevelCutoff mic_nmax(double gamma, double r0) {
    check_coulomb_couplings(gamma, r0);
    const double radicand = r0 * gamma - 1.0 / (2.0 * r0 * r0);
    if (radicand < 0.0) return LevelCutoff::empty();
    const int n = nudged_floor(std::sqrt(radicand)) - 1;
    return n < 0 ? LevelCutoff::empty() : LevelCutoff::bounded(n);
}

SpectrumLine mic_spectrum(double gamma, double r0, HalfInt s, int k) {
    require_nonnegative(k, "k");
    check_coulomb_couplings(gamma, r0);
    const double n = k + s.abs().value();
    const DegeneracyReport deg = mic_degeneracy(k, s);
    const LevelCutoff cut = mic_nmax(gamma, r0);

    SpectrumLine l;
    l.system = "mic";
    l.epsilon = -1;
    l.quantum_numbers = {{"s", s}, {"k", HalfInt::from_int(k)}};
    l.energy = -n * (n + 2.0) / (2.0 * r0 * r0) - gamma * gamma / (2.0 * (n + 1.0) * (n + 1.0));
    l.degeneracy = deg.enumerated;
    l.degeneracy_formula = deg.paper_formula;
    l.within_cutoff = cut.kind == LevelCutoff::Kind::bounded && n <= cut.n_max + kFloorNudge;
    return l;
}

std::vector<SpectrumLine> mic_tower(double gamma, double r0, HalfInt s) {
    std::vector<SpectrumLine> out;
    for (int k = 0;; ++k) {
        SpectrumLine l = mic_spectrum(gamma, r0, s, k);
        if (!l.within_cutoff) break;
        out.push_back(std::move(l));
    }
    return out;
}

namespace {

void put(std::ostream& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}

}  // namespace

void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumLine>& lines) {
    out << "system,epsilon";
    if (!lines.empty())
        for (const auto& [name, value] : lines.front().quantum_numbers) out << ',' << name;
    out << ",energy,within_cutoff,degeneracy_enum,degeneracy_paper_formula\n";
    for (const SpectrumLine& l : lines) {
        out << l.system << ',' << l.epsilon;
        for (const auto& [name, value] : l.quantum_numbers) {
            out << ',';
            put(out, value.value());
        }
        out << ',';
        put(out, l.energy);
        out << ',' << (l.within_cutoff ? 1 : 0) << ',' << l.degeneracy << ',';
        if (l.degeneracy_formula) put(out, *l.degeneracy_formula);
        out << '\n';
    }
}

}  // namespace stereodual
