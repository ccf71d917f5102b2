#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>

#include "stereodual/algebra.hpp"
#include "stereodual/constants.hpp"
#include "stereodual/duality.hpp"
#include "stereodual/errors.hpp"
#include "stereodual/half_int.hpp"
#include "stereodual/integrator.hpp"
#include "stereodual/observables.hpp"
#include "stereodual/sampling.hpp"
#include "stereodual/spectra.hpp"
#include "svg.hpp"

namespace stereodual::cli {

namespace {

Curvature curvature_of(const RunConfig& c) { return c.epsilon > 0 ? Curvature::sphere : Curvature::pseudosphere; }

SpaceParams oscillator_of(const RunConfig& c, int dim) {
    return SpaceParams::oscillator(curvature_of(c), c.radius, c.alpha, dim);
}

std::ofstream open_file(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

PhasePoint point_from_config(const RunConfig& c) {
    std::vector<cplx> z, pi;
    for (std::size_t k = 0; k + 1 < c.z0.size(); k += 2) {
        z.emplace_back(c.z0[k], c.z0[k + 1]);
        pi.emplace_back(c.pi0[k], c.pi0[k + 1]);
    }
    return PhasePoint(std::move(z), std::move(pi));
}

// First seeded sample whose orbit stays away from the boundary and the centre.
PhasePoint sample_bound_point(const HamiltonianSystem& sys, std::uint64_t seed) {
    PointSampler sampler(seed);
    const SpaceParams& p = sys.params();
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const PhasePoint x = sampler.sample(sys.n());
        double H = 0.0;
        try {
            H = sys.hamiltonian(x);
        } catch (const Error&) {
            continue;
        }
        switch (sys.kind()) {
            case SystemKind::coulomb2d:
                if (H < -1.05 * p.coupling / p.radius && std::abs(u1_generator(x)) > 0.05) return x;
                break;
            default:
                if (p.curvature == Curvature::sphere || H < 0.45 * p.coupling * p.coupling * p.radius * p.radius)
                    return x;
        }
    }
    throw ConfigError(sys.kind() == SystemKind::coulomb2d ? "gamma" : "alpha",
                      "no bound orbit found in the sampling annulus; give z0 and pi0 explicitly");
}

template <class Point>
std::vector<Point> sample_until(std::size_t count, const char* key, const std::string& what,
                                const std::function<Point()>& attempt) {
    std::vector<Point> out;
    std::size_t tries = 0;
    while (out.size() < count) {
        if (++tries > 1000 * count + 1000) throw ConfigError(key, what);
        try {
            out.push_back(attempt());
        } catch (const PreconditionError&) {
        }
    }
    return out;
}

int violations_of_increase(const std::vector<double>& e) {
    int bad = 0;
    for (std::size_t k = 1; k < e.size(); ++k)
        if (!(e[k] > e[k - 1])) ++bad;
    return bad;
}

}  // namespace

// ------------------------------------------------------------------ simulate

void run_simulate(const RunConfig& c, Summary& summary, std::ostream& log) {
    const SystemKind kind = system_from_string(c.system);
    const SpaceParams params = kind == SystemKind::coulomb2d ? SpaceParams::coulomb(c.r0, c.gamma)
                                                             : oscillator_of(c, kind == SystemKind::osc4d ? 4 : 2);
    const HamiltonianSystem sys(kind, params);
    const PhasePoint p0 = c.z0.empty() ? sample_bound_point(sys, c.seed) : point_from_config(c);

    IntegratorOptions opts;
    opts.tol = c.tol;
    const Trajectory tr = integrate(p0, sys, c.T, opts);
    log << c.system << ": " << tr.size() - 1 << " accepted steps to T = " << c.T << '\n';

    const auto dir = c.command_dir();
    {
        auto out = open_file(dir / "trajectory.csv");
        write_trajectory_csv(out, tr);
    }
    for (const Drift& d : drift_report(tr)) summary.check("drift_" + d.name, d.value, c.drift_tol);
    summary.note("initial_H", tr.invariant_log.front()[0]);
    summary.note("steps", static_cast<double>(tr.size() - 1));

    if (kind == SystemKind::osc4d) {
        const double E = tr.invariant_log.front()[0];
        double worst = 0.0;
        for (const PhasePoint& p : tr.states) {
            try {
                worst = std::max(worst, mic_surface_check(p, params, E, 1e-8));
            } catch (const PreconditionError&) {
                worst = HUGE_VAL;
            }
        }
        summary.check("mic_surface_along_orbit", worst, 1e-8);
        auto out = open_file(dir / "reduced.csv");
        write_reduced_csv(out, push_forward_ks(tr));
    }

    if (c.plots) {
        plot_orbit_disk(dir / "trajectory.csv", dir / "orbit_disk.svg");
        if (kind != SystemKind::osc4d)
            plot_orbit_ambient(dir / "trajectory.csv", params.epsilon() > 0 ? 1 : -1, params.radius,
                               dir / "orbit_ambient.svg");
    }
}

// ------------------------------------------------------------ verify-algebra

void run_verify_algebra(const RunConfig& c, Summary& summary, std::ostream& log) {
    const SpaceParams sphere = SpaceParams::oscillator(Curvature::sphere, c.radius, c.alpha);
    const SpaceParams pseudo = SpaceParams::oscillator(Curvature::pseudosphere, c.radius, c.alpha);
    const SpaceParams coulomb = SpaceParams::coulomb(c.r0, c.gamma);

    PointSampler sampler(c.seed);
    std::vector<PhasePoint> points;
    for (int i = 0; i < c.points; ++i) points.push_back(sampler.planar());

    struct Row {
        double cubic_sphere, cubic_pseudo, reduced, gradient;
    };
    const auto rows = parallel_map<Row>(points.size(), c.threads, [&](std::size_t i) {
        const PhasePoint& p = points[i];
        return Row{cubic_algebra_residual(p, sphere).max(), cubic_algebra_residual(p, pseudo).max(),
                   reduced_algebra_residual(p, coulomb).max(),
                   std::max(gradient_oracle_gap(p, sphere, coulomb), gradient_oracle_gap(p, pseudo, coulomb))};
    });

    auto out = open_file(c.command_dir() / "algebra.csv");
    out << "index,Re_z,Im_z,Re_pi,Im_pi,cubic_sphere,cubic_pseudosphere,reduced,gradient_gap\n";
    Row worst{0, 0, 0, 0};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& r = rows[i];
        out << i << ',' << fmt17(points[i].z[0].real()) << ',' << fmt17(points[i].z[0].imag()) << ','
            << fmt17(points[i].pi[0].real()) << ',' << fmt17(points[i].pi[0].imag()) << ',' << fmt17(r.cubic_sphere)
            << ',' << fmt17(r.cubic_pseudo) << ',' << fmt17(r.reduced) << ',' << fmt17(r.gradient) << '\n';
        worst.cubic_sphere = std::max(worst.cubic_sphere, r.cubic_sphere);
        worst.cubic_pseudo = std::max(worst.cubic_pseudo, r.cubic_pseudo);
        worst.reduced = std::max(worst.reduced, r.reduced);
        worst.gradient = std::max(worst.gradient, r.gradient);
    }
    summary.check("cubic_algebra_sphere", worst.cubic_sphere, 1e-8);
    summary.check("cubic_algebra_pseudosphere", worst.cubic_pseudo, 1e-8);
    summary.check("reduced_algebra", worst.reduced, 1e-8);
    summary.check("gradient_oracle", worst.gradient, 1e-6);
    log << points.size() << " points, seed " << c.seed << '\n';
}

// -------------------------------------------------------------------- bohlin

void run_bohlin(const RunConfig& c, Summary& summary, std::ostream& log) {
    if (!(c.energy > 0.0)) throw ConfigError("energy", "the oscillator energy must be positive");
    const SpaceParams osc = oscillator_of(c, 2);
    const DualityRecord rec = bohlin_params(c.energy, osc);
    {
        auto out = open_file(c.command_dir() / "duality_record.csv");
        write_duality_record_csv(out, rec);
    }

    PointSampler sampler(c.seed);
    const auto points = sample_until<PhasePoint>(
        static_cast<std::size_t>(c.points), "energy", "energy surface not reached inside the sampling annulus",
        [&] { return place_on_energy_surface(sampler.planar(), osc, c.energy); });

    struct Row {
        double canonicity, surface, J, I;
    };
    const auto rows = parallel_map<Row>(points.size(), c.threads, [&](std::size_t i) {
        const auto m = bohlin_constants_map(points[i], osc);
        return Row{bohlin_canonicity_residual(points[i]), bohlin_surface_check(points[i], osc, c.energy), m.J, m.I};
    });

    auto out = open_file(c.command_dir() / "bohlin.csv");
    out << "index,Re_z,Im_z,Re_pi,Im_pi,canonicity,surface,J_map,I_map\n";
    Row worst{0, 0, 0, 0};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& r = rows[i];
        out << i << ',' << fmt17(points[i].z[0].real()) << ',' << fmt17(points[i].z[0].imag()) << ','
            << fmt17(points[i].pi[0].real()) << ',' << fmt17(points[i].pi[0].imag()) << ',' << fmt17(r.canonicity)
            << ',' << fmt17(r.surface) << ',' << fmt17(r.J) << ',' << fmt17(r.I) << '\n';
        worst.canonicity = std::max(worst.canonicity, r.canonicity);
        worst.surface = std::max(worst.surface, r.surface);
        worst.J = std::max(worst.J, r.J);
        worst.I = std::max(worst.I, r.I);
    }
    summary.check("canonicity", worst.canonicity, 1e-9);
    summary.check("surface_transport", worst.surface, 1e-10);
    summary.check("constants_map_J", worst.J, 1e-10);
    summary.check("constants_map_I", worst.I, 1e-10);
    summary.note("r0", rec.r0);
    summary.note("gamma", rec.gamma);
    summary.note("E_C", rec.E_C);
    log << "E = " << c.energy << " -> r0 = " << rec.r0 << ", gamma = " << rec.gamma << ", E_C = " << rec.E_C << '\n';
}

// ------------------------------------------------------------------------ ks

void run_ks(const RunConfig& c, Summary& summary, std::ostream& log) {
    const SpaceParams osc = oscillator_of(c, 4);
    const double charge = parse_real(c.s);
    PointSampler sampler(c.seed);

    // identities on free samples
    std::vector<PhasePoint> points;
    for (int i = 0; i < c.points; ++i) points.push_back(sampler.pair());
    double norm_gap = 0.0, fiber_gap = 0.0;
    for (int i = 0; i < 10 * c.points; ++i) {
        const PhasePoint p = i < c.points ? points[i] : sampler.pair();
        const ReducedPoint a = ks_map(p);
        norm_gap = std::max(norm_gap, std::abs(a.u_norm() - p.z_norm2()) / p.z_norm2());
        const cplx ph = std::polar(1.0, sampler.uniform(0.0, 2.0 * std::numbers::pi));
        const ReducedPoint b = ks_map(PhasePoint({p.z[0] * ph, p.z[1] * ph}, {p.pi[0] / ph, p.pi[1] / ph}));
        const double pscale = std::max(1.0, std::sqrt(a.p_norm2()));
        for (int k = 0; k < 3; ++k)
            fiber_gap = std::max({fiber_gap, std::abs(a.u[k] - b.u[k]) / std::max(1.0, a.u_norm()),
                                  std::abs(a.p[k] - b.p[k]) / pscale});
    }
    summary.check("ks_norm_identity", norm_gap, 1e-12);
    summary.check("fiber_invariance", fiber_gap, 1e-12);

    const auto brackets = parallel_map<ReducedBracketResidual>(
        points.size(), c.threads, [&](std::size_t i) { return reduced_bracket_check(points[i]); });
    ReducedBracketResidual worst;
    for (const auto& r : brackets) {
        worst.uu = std::max(worst.uu, r.uu);
        worst.pu = std::max(worst.pu, r.pu);
        worst.pp = std::max(worst.pp, r.pp);
    }
    summary.check("reduced_bracket_uu", worst.uu, 1e-9);
    summary.check("reduced_bracket_pu", worst.pu, 1e-8);
    summary.check("reduced_bracket_pp", worst.pp, 1e-8);

    const auto probe = std::find_if(points.begin(), points.end(), [](const PhasePoint& p) {
        const ReducedPoint r = ks_map(p);
        return std::abs(r.u[2]) > 0.1 * r.u_norm() && std::abs(r.s) > 0.05;
    });
    if (probe != points.end()) {
        const double measured = measure_monopole_constant(*probe);
        summary.note("monopole_constant_measured", measured);
        summary.check("monopole_constant", std::abs(measured - kMonopoleBracketConstant), 1e-6);
    }

    // joint level set J = 2s, H = E
    const auto level = sample_until<PhasePoint>(
        static_cast<std::size_t>(c.points), "energy", "joint level set H = E, J = 2s is empty in the sampling annulus",
        [&] { return place_on_joint_level_set(sampler.pair().z, osc, c.energy, charge, sampler); });
    const auto mic = parallel_map<double>(level.size(), c.threads,
                                          [&](std::size_t i) { return mic_surface_check(level[i], osc, c.energy); });
    summary.check("mic_surface_level_set", *std::max_element(mic.begin(), mic.end()), 1e-9);

    IntegratorOptions opts;
    opts.tol = c.tol;
    const Trajectory tr = integrate(level.front(), HamiltonianSystem(SystemKind::osc4d, osc), c.T, opts);
    double along = 0.0;
    for (const PhasePoint& p : tr.states) {
        try {
            along = std::max(along, mic_surface_check(p, osc, c.energy, 1e-8));
        } catch (const PreconditionError&) {
            along = HUGE_VAL;
        }
    }
    summary.check("mic_surface_along_orbit", along, 1e-8);

    const auto dir = c.command_dir();
    {
        auto out = open_file(dir / "reduced_trajectory.csv");
        write_reduced_csv(out, push_forward_ks(tr));
    }
    auto out = open_file(dir / "ks.csv");
    out << "index,uu,pu,pp,mic_surface\n";
    for (std::size_t i = 0; i < points.size(); ++i)
        out << i << ',' << fmt17(brackets[i].uu) << ',' << fmt17(brackets[i].pu) << ',' << fmt17(brackets[i].pp)
            << ',' << fmt17(mic[i]) << '\n';
    log << "s = " << charge << ", E = " << c.energy << ", " << tr.size() - 1 << " steps along the orbit\n";
}

// ------------------------------------------------------------------ spectrum

void run_spectrum(const RunConfig& c, Summary& summary, std::ostream& log) {
    std::vector<SpectrumLine> lines;
    const auto dir = c.command_dir();

    if (c.system == "osc2d" || c.system == "osc4d") {
        const bool four = c.system == "osc4d";
        const SpaceParams osc = oscillator_of(c, four ? 4 : 2);
        lines = four ? osc_tower_4d(osc, c.levels - 1) : osc_tower_2d(osc, c.levels - 1);

        std::vector<double> e;
        for (const auto& l : lines) e.push_back(l.energy);
        if (osc.curvature == Curvature::sphere) {
            summary.check("monotone_tower", violations_of_increase(e), 0.5);
        } else {
            // the pseudosphere tower rises only up to N + shift = at R0^2
            const double peak = tilde_alpha(osc) * osc.radius * osc.radius - (four ? 2.0 : 1.0);
            std::vector<double> rising;
            for (std::size_t N = 0; N < e.size() && N <= peak; ++N) rising.push_back(e[N]);
            summary.check("monotone_tower", violations_of_increase(rising), 0.5);

            // level count against a positive-energy scan of the closed form
            const double t = tilde_alpha(osc), R2 = osc.radius * osc.radius;
            int n = 0;
            while (true) {
                const double k = n + (four ? 2.0 : 1.0);
                const double E = t * k - (four ? k * k - 2.0 : k * k) / (2.0 * R2);
                if (!(E > 0.0)) break;
                ++n;
            }
            summary.check("level_count_mismatch", std::abs(n - static_cast<double>(lines.size())), 0.5);
        }
        summary.note("levels", static_cast<double>(lines.size()));

        if (!four) {
            double worst = 0.0;
            for (std::size_t N = 0; N < lines.size(); ++N)
                worst = std::max(worst, interrelation_residual(static_cast<int>(N), osc,
                                                               N % 2 == 0 ? Z2Sector::even : Z2Sector::odd));
            summary.check("interrelation", worst, 1e-12);

            if (osc.curvature == Curvature::sphere) {
                // fixed Coulomb coupling: the levels that survive positivity are the cutoff tower
                const double r0 = osc.radius * osc.radius;
                double mismatch = 0.0, res = 0.0;
                for (Z2Sector sec : {Z2Sector::even, Z2Sector::odd}) {
                    int survivors = 0;
                    for (int N = sigma(sec).twice(); N < 4 * static_cast<int>(std::sqrt(c.gamma * r0)) + 8; N += 2) {
                        try {
                            res = std::max(res, interrelation_residual(N, c.gamma, r0, Curvature::sphere, sec));
                            ++survivors;
                        } catch (const PositivityViolation&) {
                        }
                    }
                    const LevelCutoff cut = coulomb_nmax(c.gamma, r0, sec);
                    const int expected = cut.kind == LevelCutoff::Kind::bounded ? cut.n_max + 1 : 0;
                    mismatch += std::abs(survivors - expected);
                }
                summary.check("positivity_survivors_vs_cutoff", mismatch, 0.5);
                summary.check("interrelation_fixed_gamma", res, 1e-12 * std::max(1.0, c.gamma));
            }
        }
    } else if (c.system == "coulomb2d") {
        const Z2Sector sec = c.sigma == "0" ? Z2Sector::even : Z2Sector::odd;
        lines = coulomb_tower_2d(c.gamma, c.r0, sec);
        std::vector<double> e;
        int positive = 0;
        for (const auto& l : lines) {
            e.push_back(l.energy);
            if (!(l.energy < 0.0)) ++positive;
        }
        summary.check("monotone_tower", violations_of_increase(e), 0.5);
        summary.check("nonnegative_levels", positive, 0.5);
        summary.note("levels", static_cast<double>(lines.size()));
    } else {
        const HalfInt s = HalfInt::parse(c.s);
        const LevelCutoff cut = mic_nmax(c.gamma, c.r0);
        const int admissible = static_cast<int>(mic_tower(c.gamma, c.r0, s).size());
        const int count = std::max(c.levels, admissible);
        std::vector<double> e;
        int mismatches = 0;
        auto deg = open_file(dir / "degeneracy.csv");
        deg << "k,s,degeneracy_enum,degeneracy_paper_formula,agree\n";
        for (int k = 0; k < count; ++k) {
            lines.push_back(mic_spectrum(c.gamma, c.r0, s, k));
            if (lines.back().within_cutoff) e.push_back(lines.back().energy);
            const DegeneracyReport d = mic_degeneracy(k, s);
            const bool agree = std::abs(d.paper_formula - static_cast<double>(d.enumerated)) < 0.5;
            if (!agree) ++mismatches;
            deg << k << ',' << s.str() << ',' << d.enumerated << ',' << fmt17(d.paper_formula) << ','
                << (agree ? 1 : 0) << '\n';
        }
        summary.check("monotone_tower", violations_of_increase(e), 0.5);
        summary.note("levels_within_cutoff", admissible);
        summary.note("cutoff_n_max", cut.kind == LevelCutoff::Kind::bounded ? cut.n_max : -1);
        summary.note("k0_energy", lines.front().energy);
        summary.note("degeneracy_paper_mismatches", mismatches);
    }

    {
        auto out = open_file(dir / "spectrum.csv");
        write_spectrum_csv(out, lines);
    }
    if (c.plots) plot_spectrum_ladder(dir / "spectrum.csv", dir / "spectrum_ladder.svg");
    log << c.system << ": " << lines.size() << " lines\n";
}

}  // namespace stereodual::cli
