#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stereodual/geometry.hpp"
#include "stereodual/half_int.hpp"

namespace stereodual {

/// Z2 sector of the Bohlin reduction: even (sigma = 0) or odd (sigma = 1/2) states.
enum class Z2Sector { even, odd };

constexpr HalfInt sigma(Z2Sector s) noexcept {
    return HalfInt::from_twice(s == Z2Sector::even ? 0 : 1);
}

/// Number of admissible levels of a tower, as returned by the cutoff formulas.
struct LevelCutoff {
    enum class Kind { bounded, unbounded, empty };
    Kind kind = Kind::unbounded;
    int n_max = 0;  ///< meaningful for `bounded` only

    static LevelCutoff bounded(int n) { return {Kind::bounded, n}; }
    static LevelCutoff unbounded() { return {Kind::unbounded, 0}; }
    static LevelCutoff empty() { return {Kind::empty, 0}; }

    bool admits(int n) const noexcept {
        return kind == Kind::unbounded || (kind == Kind::bounded && n >= 0 && n <= n_max);
    }
};

/// One level of a closed-form spectrum.
struct SpectrumLine {
    std::string system;
    int epsilon = -1;
    std::vector<std::pair<std::string, HalfInt>> quantum_numbers;
    double energy = 0.0;
    long degeneracy = 1;                      ///< from enumeration
    std::optional<double> degeneracy_formula; ///< printed closed form, where one exists
    bool within_cutoff = true;
};

/// Upward nudge applied before every floor bracket of a cutoff formula.
inline constexpr double kFloorNudge = 1e-12;
int nudged_floor(double x);

/// sqrt(alpha^2 + 1/(4 R0^4)).
double tilde_alpha(const SpaceParams& oscillator);

// two-dimensional oscillator --------------------------------------------------

/// E = at (N+1) + eps (N+1)^2/(2R0^2). RangeError beyond the pseudosphere cutoff.
double osc_spectrum_2d(const SpaceParams& oscillator, int N);

/// unbounded for eps = +1, floor(2 at R0^2) - 1 for eps = -1.
LevelCutoff osc_nmax_2d(const SpaceParams& oscillator);

/// Levels N = 0..N_max (or 0..n_limit when unbounded), degeneracy N+1 by enumeration of (n_r, M).
std::vector<SpectrumLine> osc_tower_2d(const SpaceParams& oscillator, int n_limit = 20);

// two-dimensional Coulomb on the pseudosphere --------------------------------

/// E_C = -N(N+1)/(2 r0^2) - gamma^2/(2(N+1/2)^2) with N = n_r + |m|.
/// Requires |m| - sigma to be a nonnegative integer; RangeError past coulomb_nmax.
SpectrumLine coulomb_spectrum_2d(double gamma, double r0, Z2Sector sector, int n_r, HalfInt m);

/// floor(sqrt(r0 gamma) - (1/2 + sigma)); empty when the argument is negative.
LevelCutoff coulomb_nmax(double gamma, double r0, Z2Sector sector);

/// Levels N_sigma - sigma = 0..coulomb_nmax, one line per N_sigma.
std::vector<SpectrumLine> coulomb_tower_2d(double gamma, double r0, Z2Sector sector);

/// |sqrt(1/(4r0^2) - eps 2 gamma/r0 - 2E_C) - (2 gamma/(N+1) - eps (N+1)/(2 r0))|
/// with gamma and r0 from level N of the oscillator (gamma = E_N/2, r0 = R0^2)
/// and E_C from coulomb_spectrum_2d at N_sigma = N/2.
/// QuantumNumberError when the parity of N does not match the sector.
double interrelation_residual(int N, const SpaceParams& oscillator, Z2Sector sector);

/// Same identity for a Coulomb system with fixed (gamma, r0) and curvature sign
/// of the parent oscillator. Throws PositivityViolation when the right-hand side
/// is negative, i.e. when level N does not map.
double interrelation_residual(int N, double gamma, double r0, Curvature parent, Z2Sector sector);

// four-dimensional oscillator ------------------------------------------------

/// E = at (N+2) + eps ((N+2)^2 - 2)/(2 R0^2).
double osc_spectrum_4d(const SpaceParams& oscillator, int N);

/// Validating form: N = 2 n_r + |L|, 2|s| <= |L|.
double osc_spectrum_4d(const SpaceParams& oscillator, int n_r, int L, HalfInt s);

/// unbounded for eps = +1, floor(at R0^2 (1 + sqrt(1 + 2/(at R0^2)^2))) - 2 for eps = -1.
LevelCutoff osc_nmax_4d(const SpaceParams& oscillator);

/// Levels with degeneracy (N+1)(N+2)(N+3)/6 counted over four occupation numbers.
std::vector<SpectrumLine> osc_tower_4d(const SpaceParams& oscillator, int n_limit = 20);

// MIC-Kepler on the pseudosphere ---------------------------------------------

struct DegeneracyReport {
    long enumerated = 0;        ///< sum of 2 l_s + 1 over l_s = |s|..k+|s|
    double paper_formula = 0.0; ///< k (k + |s| - 1)
};

DegeneracyReport mic_degeneracy(int k, HalfInt s);

/// N_s^max from N_s^max + 1 = floor(sqrt(r0 gamma - 1/(2 r0^2))); empty when the
/// radicand is negative or N_s^max < 0.
LevelCutoff mic_nmax(double gamma, double r0);

/// E_C = -(k+|s|)(k+|s|+2)/(2 r0^2) - gamma^2/(2(k+|s|+1)^2).
/// Never throws on the cutoff; `within_cutoff` reports k + |s| <= N_s^max.
SpectrumLine mic_spectrum(double gamma, double r0, HalfInt s, int k);

/// Admissible levels k = 0..N_s^max - |s|.
std::vector<SpectrumLine> mic_tower(double gamma, double r0, HalfInt s);

/// CSV: system, epsilon, quantum number columns, energy, within_cutoff,
/// degeneracy_enum, degeneracy_paper_formula. Lines must share quantum number names.
void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumLine>& lines);

}  // namespace stereodual
