#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "stereodual/geometry.hpp"
#include "stereodual/phase_space.hpp"

namespace stereodual {

enum class SystemKind { osc2d, coulomb2d, osc4d };

std::string_view to_string(SystemKind kind);
/// Throws std::invalid_argument for unknown names.
SystemKind system_from_string(std::string_view name);

/// Integration aborts when (1 - eps z zbar), (1 + eps z zbar) or |w| fall below this.
inline constexpr double kSingularityGuard = 1e-8;

/// A Hamiltonian flow together with the invariants logged along it.
class HamiltonianSystem {
public:
    HamiltonianSystem(SystemKind kind, SpaceParams params);

    SystemKind kind() const noexcept { return kind_; }
    const SpaceParams& params() const noexcept { return params_; }
    std::size_t n() const noexcept { return kind_ == SystemKind::osc4d ? 2 : 1; }

    double hamiltonian(const PhasePoint& p) const;
    WirtingerGradient gradient(const PhasePoint& p) const;

    /// Names of the logged invariants, e.g. H, J, ReI, ImI.
    const std::vector<std::string>& invariant_names() const noexcept { return names_; }
    std::vector<double> invariants(const PhasePoint& p) const;

    /// Distance to the nearest singular set, in the units of the guard.
    double singularity_margin(const PhasePoint& p) const;

    /// Coefficient K(z) of the kinetic term K * pi pibar.
    double kinetic_coefficient(const PhasePoint& p) const;

private:
    SystemKind kind_;
    SpaceParams params_;
    std::vector<std::string> names_;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<PhasePoint> states;
    std::vector<std::string> invariant_names;
    std::vector<std::vector<double>> invariant_log;  // one row per time

    std::size_t size() const noexcept { return times.size(); }
    bool empty() const noexcept { return times.empty(); }
};

struct IntegratorOptions {
    double tol = 1e-12;
    double guard = kSingularityGuard;
    std::size_t max_steps = 5'000'000;
    /// Step sizes below min_step_rel * T count as underflow.
    double min_step_rel = 1e-15;
};

/// Adaptive Runge-Kutta-Fehlberg 7(8) integration of z' = dH/dpi, pi' = -dH/dz
/// from t = 0 to t = T. Every accepted step is logged.
///
/// Throws SingularityApproach when a step lands inside the guard zone and
/// StepFailure on step-size underflow.
Trajectory integrate(const PhasePoint& p0, const HamiltonianSystem& system, double T,
                     const IntegratorOptions& opts = {});

/// State at time dt (no logging).
PhasePoint propagate(const PhasePoint& p0, const HamiltonianSystem& system, double dt,
                     const IntegratorOptions& opts = {});

struct Drift {
    std::string name;
    double value;
};

/// max_t |f(t) - f(0)| / max(1, |f(0)|) for every logged invariant.
std::vector<Drift> drift_report(const Trajectory& t);

/// Period of a closed orbit: time between the first two upward crossings of
/// Re z^1 = 0, located by secant refinement on the flow. Throws StepFailure
/// when no two crossings occur before t_max.
double measure_period(const PhasePoint& p0, const HamiltonianSystem& system, double t_max,
                      const IntegratorOptions& opts = {});

/// CSV: t, Re z.., Im z.., Re pi.., Im pi.., invariants; 17 significant digits.
void write_trajectory_csv(std::ostream& out, const Trajectory& t);

}  // namespace stereodual
