#pragma once

#include <iosfwd>

#include "artifacts.hpp"
#include "cli.hpp"

namespace stereodual::cli {

// Each command fills `summary` and writes its artifacts into config.command_dir().
void run_simulate(const RunConfig& config, Summary& summary, std::ostream& log);
void run_verify_algebra(const RunConfig& config, Summary& summary, std::ostream& log);
void run_bohlin(const RunConfig& config, Summary& summary, std::ostream& log);
void run_ks(const RunConfig& config, Summary& summary, std::ostream& log);
void run_spectrum(const RunConfig& config, Summary& summary, std::ostream& log);

/// Aggregates the other commands' summaries into report.md and report.csv.
/// Returns false when any record failed.
bool run_report(const RunConfig& config, std::ostream& log);

/// Suites aggregated by `report`, in report order.
inline constexpr Command kSuites[] = {Command::simulate, Command::verify_algebra, Command::bohlin, Command::ks,
                                      Command::spectrum};

}  // namespace stereodual::cli
