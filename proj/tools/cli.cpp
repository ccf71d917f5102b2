#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <ostream>

#include "CLI11.hpp"
#include "artifacts.hpp"
#include "commands.hpp"
#include "stereodual/errors.hpp"
#include "stereodual/half_int.hpp"

namespace stereodual::cli {

namespace {

const char* const kCommands[] = {"simulate", "verify-algebra", "bohlin", "ks", "spectrum", "report"};

Command command_from_string(const std::string& name) {
    for (int i = 0; i < 6; ++i)
        if (name == kCommands[i]) return static_cast<Command>(i);
    throw ConfigError("command", "unknown command '" + name + "'");
}

void build_app(CLI::App& app, RunConfig& c, std::string& command, std::string& out) {
    app.set_config("--config", "", "Flat key=value file; flags given on the command line take precedence");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.add_option("command", command, "simulate | verify-algebra | bohlin | ks | spectrum | report")->required();

    app.add_option("--system", c.system, "osc2d | coulomb2d | osc4d (simulate); also mic (spectrum)");
    app.add_option("--epsilon", c.epsilon, "Curvature sign of the oscillator space, +1 or -1");
    app.add_option("--radius", c.radius, "Oscillator radius R0");
    app.add_option("--alpha", c.alpha, "Oscillator frequency");
    app.add_option("--r0", c.r0, "Coulomb radius");
    app.add_option("--gamma", c.gamma, "Coulomb coupling");
    app.add_option("--energy", c.energy, "Oscillator energy E for bohlin and ks");
    app.add_option("--T", c.T, "Integration time");
    app.add_option("--tol", c.tol, "Integrator tolerance");
    app.add_option("--drift-tol", c.drift_tol, "Largest accepted relative drift");
    app.add_option("--z0", c.z0, "Initial z as re,im[,re,im]")->delimiter(',');
    app.add_option("--pi0", c.pi0, "Initial pi as re,im[,re,im]")->delimiter(',');
    app.add_option("--sigma", c.sigma, "Z2 sector of the Coulomb spectrum, 0 or 1/2");
    app.add_option("--s", c.s, "Monopole charge (half-integer for spectra)");
    app.add_option("--seed", c.seed, "Sampling seed");
    app.add_option("--points", c.points, "Number of sampled phase points");
    app.add_option("--levels", c.levels, "Levels listed for unbounded towers");
    app.add_option("--threads", c.threads, "Worker threads, 0 for all cores");
    app.add_flag("--plots", c.plots, "Write SVG plots next to the CSV files");
    app.add_option("--out", out, "Output directory (default: $STEREODUAL_OUT or ./stereodual-out)");
}

double parse_number(const std::string& key, const std::string& text) {
    try {
        return parse_real(text);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(key, e.what());
    }
}

void validate(const RunConfig& c) {
    auto positive = [](const char* key, double v) {
        if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(key, "must be positive, got " + std::to_string(v));
    };
    auto nonnegative = [](const char* key, double v) {
        if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError(key, "must be nonnegative, got " + std::to_string(v));
    };
    if (c.epsilon != 1 && c.epsilon != -1)
        throw ConfigError("epsilon", "must be +1 or -1, got " + std::to_string(c.epsilon));
    positive("radius", c.radius);
    positive("r0", c.r0);
    nonnegative("alpha", c.alpha);
    nonnegative("gamma", c.gamma);
    positive("T", c.T);
    positive("tol", c.tol);
    positive("drift-tol", c.drift_tol);
    if (c.points < 1) throw ConfigError("points", "must be at least 1");
    if (c.levels < 1) throw ConfigError("levels", "must be at least 1");
    if (!std::isfinite(c.energy)) throw ConfigError("energy", "must be finite");

    const bool spectrum = c.command == Command::spectrum;
    const bool known = c.system == "osc2d" || c.system == "coulomb2d" || c.system == "osc4d" ||
                       (spectrum && c.system == "mic");
    if (!known) throw ConfigError("system", "unknown system '" + c.system + "' for " + to_string(c.command));

    if (c.sigma != "0" && c.sigma != "1/2" && c.sigma != "0.5")
        throw ConfigError("sigma", "must be 0 or 1/2, got '" + c.sigma + "'");
    if (spectrum) {
        try {
            HalfInt::parse(c.s);
        } catch (const std::invalid_argument&) {
            throw ConfigError("s", "must be an integer or half-integer, got '" + c.s + "'");
        }
    } else {
        parse_number("s", c.s);
    }

    if (c.z0.empty() != c.pi0.empty()) throw ConfigError(c.z0.empty() ? "z0" : "pi0", "give both z0 and pi0");
    if (!c.z0.empty()) {
        const std::size_t want = c.system == "osc4d" ? 4 : 2;
        if (c.z0.size() != want) throw ConfigError("z0", "expected " + std::to_string(want) + " numbers");
        if (c.pi0.size() != want) throw ConfigError("pi0", "expected " + std::to_string(want) + " numbers");
    }
}

// Option name mentioned in a CLI11 message, e.g. "--tol: ..." -> "tol".
std::string key_of(const std::string& message, const std::string& fallback) {
    const auto at = message.find("--");
    if (at == std::string::npos) return fallback;
    auto end = message.find_first_of(" :=,", at + 2);
    return message.substr(at + 2, end == std::string::npos ? std::string::npos : end - at - 2);
}

}  // namespace

std::string to_string(Command c) { return kCommands[static_cast<int>(c)]; }

std::string usage() {
    RunConfig c;
    std::string command, out;
    CLI::App app{"Oscillator/Coulomb duality toolkit on spheres and pseudospheres", "stereodual"};
    build_app(app, c, command, out);
    return app.help();
}

RunConfig parse_config(const std::vector<std::string>& args) {
    RunConfig c;
    std::string command, out;
    CLI::App app{"Oscillator/Coulomb duality toolkit on spheres and pseudospheres", "stereodual"};
    build_app(app, c, command, out);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw;
    } catch (const CLI::ConfigError& e) {
        // unknown or malformed key in the config file
        std::string msg = e.what();
        std::string key = "config";
        if (const auto pos = msg.rfind(' '); pos != std::string::npos) key = msg.substr(pos + 1);
        throw ConfigError(key, msg);
    } catch (const CLI::ParseError& e) {
        throw ConfigError(key_of(e.what(), "command"), e.what());
    }

    c.command = command_from_string(command);
    if (!out.empty()) {
        c.out = out;
    } else if (const char* env = std::getenv("STEREODUAL_OUT"); env && *env) {
        c.out = env;
    }
    validate(c);
    return c;
}

int run(const RunConfig& config, std::ostream& log) {
    if (config.command == Command::report) return run_report(config, log) ? 0 : 1;

    std::filesystem::create_directories(config.command_dir());
    Summary summary;
    switch (config.command) {
        case Command::simulate: run_simulate(config, summary, log); break;
        case Command::verify_algebra: run_verify_algebra(config, summary, log); break;
        case Command::bohlin: run_bohlin(config, summary, log); break;
        case Command::ks: run_ks(config, summary, log); break;
        case Command::spectrum: run_spectrum(config, summary, log); break;
        case Command::report: break;
    }
    summary.write(config.command_dir() / "summary.jsonl");

    for (const Check& r : summary.records()) {
        log << (!r.tolerance ? "INFO " : r.pass ? "PASS " : "FAIL ") << r.name << " = " << fmt17(r.value);
        if (r.tolerance) log << " (tolerance " << *r.tolerance << ')';
        log << '\n';
    }
    log << "wrote " << config.command_dir().string() << '\n';
    return summary.all_passed() ? 0 : 1;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << usage();
        return 2;
    }
    RunConfig config;
    try {
        config = parse_config(args);
    } catch (const CLI::CallForHelp&) {
        out << usage();
        return 0;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return 2;
    }
    try {
        return run(config, out);
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace stereodual::cli
