#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "artifacts.hpp"
#include "cli.hpp"

using namespace stereodual::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("stereodual_test_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(std::vector<std::string> args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
    std::ostringstream out, err;
    const int code = main(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_CASE("empty argv prints usage") {
    std::string err;
    CHECK(run_cli({}, nullptr, &err) == 2);
    CHECK(err.find("Usage") != std::string::npos);
    std::string out;
    CHECK(run_cli({"--help"}, &out) == 0);
    CHECK(out.find("--epsilon") != std::string::npos);
}

TEST_CASE("invalid values name their key") {
    auto key_of = [](std::vector<std::string> args) {
        try {
            parse_config(args);
        } catch (const ConfigError& e) {
            return e.key();
        }
        return std::string("<none>");
    };
    CHECK(key_of({"simulate", "--epsilon", "0"}) == "epsilon");
    CHECK(key_of({"simulate", "--radius", "-1"}) == "radius");
    CHECK(key_of({"simulate", "--tol", "abc"}) == "tol");
    CHECK(key_of({"simulate", "--system", "mic"}) == "system");
    CHECK(key_of({"spectrum", "--system", "mic", "--s", "1/3"}) == "s");
    CHECK(key_of({"spectrum", "--sigma", "1"}) == "sigma");
    CHECK(key_of({"simulate", "--z0", "0.1,0.2"}) == "pi0");
    CHECK(key_of({"frobnicate"}) == "command");

    std::string err;
    CHECK(run_cli({"simulate", "--epsilon", "0"}, nullptr, &err) == 2);
    CHECK(err.find("epsilon") != std::string::npos);
}

TEST_CASE("config file values and flag precedence") {
    const fs::path dir = scratch("config");
    const fs::path cfg = dir / "run.cfg";
    {
        std::ofstream f(cfg);
        f << "# integration\ntol=1e-10\nalpha=0.5\nseed=11\n";
    }
    RunConfig c = parse_config({"simulate", "--config", cfg.string()});
    CHECK(c.tol == 1e-10);
    CHECK(c.alpha == 0.5);
    CHECK(c.seed == 11);

    c = parse_config({"simulate", "--config", cfg.string(), "--tol", "1e-12"});
    CHECK(c.tol == 1e-12);
    CHECK(c.alpha == 0.5);

    {
        std::ofstream f(dir / "bad.cfg");
        f << "tol=1e-10\ntolerance=3\n";
    }
    try {
        parse_config({"simulate", "--config", (dir / "bad.cfg").string()});
        FAIL("unknown key accepted");
    } catch (const ConfigError& e) {
        CHECK(e.key() == "tolerance");
    }
}

TEST_CASE("output directory resolution") {
    ::setenv("STEREODUAL_OUT", "/tmp/from-env", 1);
    CHECK(parse_config({"bohlin"}).out == fs::path("/tmp/from-env"));
    CHECK(parse_config({"bohlin", "--out", "/tmp/from-flag"}).out == fs::path("/tmp/from-flag"));
    CHECK(parse_config({"bohlin", "--out", "/tmp/x"}).command_dir() == fs::path("/tmp/x/bohlin"));
    ::unsetenv("STEREODUAL_OUT");
    CHECK(parse_config({"bohlin"}).out == fs::path("stereodual-out"));
}

TEST_CASE("spectrum command writes the MIC table") {
    const fs::path dir = scratch("spectrum");
    CHECK(run_cli({"spectrum", "--system", "mic", "--gamma", "1", "--r0", "1", "--s", "0", "--plots", "--out",
                   dir.string()}) == 0);
    const CsvTable t = read_csv(dir / "spectrum" / "spectrum.csv");
    REQUIRE(!t.rows.empty());
    CHECK(std::stod(t.rows[0][t.column("k")]) == 0.0);
    CHECK(std::stod(t.rows[0][t.column("energy")]) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(fs::exists(dir / "spectrum" / "spectrum_ladder.svg"));
    CHECK(fs::exists(dir / "spectrum" / "degeneracy.csv"));

    const auto records = read_summary(dir / "spectrum" / "summary.jsonl");
    bool saw = false;
    for (const auto& r : records)
        if (r.name == "degeneracy_paper_mismatches") saw = r.pass && !r.tolerance;
    CHECK(saw);
}

TEST_CASE("fixed seed gives byte-identical artifacts") {
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    for (const fs::path& d : {a, b}) {
        CHECK(run_cli({"verify-algebra", "--points", "200", "--seed", "5", "--out", d.string()}) == 0);
        CHECK(run_cli({"simulate", "--system", "osc2d", "--T", "5", "--plots", "--out", d.string()}) == 0);
    }
    for (const char* f : {"verify-algebra/algebra.csv", "verify-algebra/summary.jsonl", "simulate/trajectory.csv",
                          "simulate/summary.jsonl", "simulate/orbit_disk.svg"})
        CHECK_MESSAGE(slurp(a / f) == slurp(b / f), f);
    // thread count does not change the output
    const fs::path c = scratch("det_c");
    CHECK(run_cli({"verify-algebra", "--points", "200", "--seed", "5", "--threads", "1", "--out", c.string()}) == 0);
    CHECK(slurp(a / "verify-algebra/algebra.csv") == slurp(c / "verify-algebra/algebra.csv"));
}

TEST_CASE("summary schema") {
    const fs::path dir = scratch("schema");
    CHECK(run_cli({"bohlin", "--points", "20", "--out", dir.string()}) == 0);
    std::ifstream in(dir / "bohlin" / "summary.jsonl");
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        CHECK(line.rfind("{\"name\":", 0) == 0);
        CHECK(line.find("\"value\":") != std::string::npos);
        CHECK(line.find("\"tolerance\":") != std::string::npos);
        CHECK(line.find("\"pass\":") != std::string::npos);
    }
    CHECK(n >= 4);
    const CsvTable rec = read_csv(dir / "bohlin" / "duality_record.csv");
    CHECK(rec.header == std::vector<std::string>{"E", "alpha", "epsilon", "R0", "r0", "gamma", "E_C"});
}

TEST_CASE("report aggregates suites") {
    const fs::path dir = scratch("report");
    std::string err;
    CHECK(run_cli({"report", "--out", dir.string()}, nullptr, &err) == 2);
    CHECK(err.find("simulate/summary.jsonl") != std::string::npos);
    CHECK(err.find("spectrum/summary.jsonl") != std::string::npos);

    const std::string out = dir.string();
    CHECK(run_cli({"simulate", "--T", "5", "--out", out}) == 0);
    CHECK(run_cli({"verify-algebra", "--points", "50", "--out", out}) == 0);
    CHECK(run_cli({"bohlin", "--points", "50", "--out", out}) == 0);
    CHECK(run_cli({"ks", "--points", "50", "--s", "1/2", "--energy", "4", "--T", "5", "--out", out}) == 0);
    CHECK(run_cli({"spectrum", "--out", out}) == 0);

    CHECK(run_cli({"report", "--out", out}, nullptr, &err) == 0);
    const std::string md = slurp(dir / "report" / "report.md");
    const std::string csv = slurp(dir / "report" / "report.csv");
    CHECK(md.find("All checks passed") != std::string::npos);
    CHECK(csv.rfind("suite,name,value,tolerance,pass\n", 0) == 0);

    CHECK(run_cli({"report", "--out", out}) == 0);
    CHECK(slurp(dir / "report" / "report.md") == md);
    CHECK(slurp(dir / "report" / "report.csv") == csv);

    // one drift breach
    CHECK(run_cli({"simulate", "--T", "5", "--drift-tol", "1e-300", "--out", out}) == 1);
    CHECK(run_cli({"report", "--out", out}) == 1);
    const std::string flagged = slurp(dir / "report" / "report.md");
    CHECK(flagged.find("| drift_H |") != std::string::npos);
    CHECK(flagged.find("**FAIL**") != std::string::npos);
    CHECK(slurp(dir / "report" / "report.csv").find("simulate,drift_H,") != std::string::npos);
}

TEST_CASE("integration failures exit with status 1") {
    const fs::path dir = scratch("failure");
    std::string err;
    CHECK(run_cli({"simulate", "--epsilon", "-1", "--z0", "0.5,0", "--pi0", "40,0", "--T", "10", "--out",
                   dir.string()},
                  nullptr, &err) == 1);
    CHECK(err.find("guard") != std::string::npos);
}
