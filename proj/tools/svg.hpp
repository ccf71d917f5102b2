#pragma once

#include <filesystem>

namespace stereodual::cli {

// Static plots built only from previously written CSV files.

/// Stereographic view: Re z against Im z for every z column, with the unit circle.
void plot_orbit_disk(const std::filesystem::path& trajectory_csv, const std::filesystem::path& svg);

/// Oblique projection of the ambient orbit (x1, x2, x3) of an n = 1 trajectory.
void plot_orbit_ambient(const std::filesystem::path& trajectory_csv, int epsilon, double radius,
                        const std::filesystem::path& svg);

/// One horizontal rung per level, admissible levels solid, others dashed.
void plot_spectrum_ladder(const std::filesystem::path& spectrum_csv, const std::filesystem::path& svg);

}  // namespace stereodual::cli
