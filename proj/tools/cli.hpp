#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stereodual::cli {

enum class Command { simulate, verify_algebra, bohlin, ks, spectrum, report };

std::string to_string(Command c);

/// Invalid or unknown configuration; `key()` names the offending parameter.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

struct RunConfig {
    Command command = Command::simulate;

    // system
    std::string system = "osc2d";  // osc2d | coulomb2d | osc4d | mic (spectrum only)
    int epsilon = 1;
    double radius = 1.0;  // R0
    double alpha = 1.0;
    double r0 = 1.0;
    double gamma = 1.0;
    double energy = 1.0;  // oscillator energy for bohlin / ks

    // integration
    double T = 50.0;
    double tol = 1e-12;
    double drift_tol = 1e-9;
    std::vector<double> z0;   // re, im pairs; empty = sampled from the seed
    std::vector<double> pi0;

    // sectors
    std::string sigma = "0";
    std::string s = "0";

    // sampling and output
    std::uint64_t seed = 7;
    int points = 1000;
    int levels = 10;
    unsigned threads = 0;  // 0 = hardware concurrency
    bool plots = false;
    std::filesystem::path out = "stereodual-out";

    std::filesystem::path command_dir() const { return out / to_string(command); }
};

/// Usage text for the command line.
std::string usage();

/// Flags override values from `--config FILE` (flat key=value lines), which
/// override STEREODUAL_OUT for the output directory. Unknown keys and invalid
/// values throw ConfigError.
RunConfig parse_config(const std::vector<std::string>& args);

/// Runs the configured command and writes its artifacts below
/// `config.command_dir()`. Returns 0 when every check passes, 1 otherwise.
/// Missing report inputs throw ConfigError listing the absent files.
int run(const RunConfig& config, std::ostream& log);

/// Full entry point: parse, run, map errors to exit codes (2 = configuration).
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stereodual::cli
