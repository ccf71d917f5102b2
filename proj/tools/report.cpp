#include <cstdio>
#include <fstream>
#include <ostream>

#include "commands.hpp"

namespace stereodual::cli {

namespace {

std::string short_number(double v) {
    if (std::isnan(v)) return "n/a";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

}  // namespace

bool run_report(const RunConfig& config, std::ostream& log) {
    std::vector<std::string> missing;
    for (Command s : kSuites) {
        const auto path = config.out / to_string(s) / "summary.jsonl";
        if (!std::filesystem::exists(path)) missing.push_back(path.string());
    }
    if (!missing.empty()) {
        std::string list;
        for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
        throw ConfigError("out", "missing report inputs: " + list);
    }

    const auto dir = config.command_dir();
    std::filesystem::create_directories(dir);
    std::ofstream md(dir / "report.md"), csv(dir / "report.csv");
    if (!md || !csv) throw std::runtime_error("cannot write the report into " + dir.string());

    int failed = 0, total = 0;
    csv << "suite,name,value,tolerance,pass\n";
    std::string body;
    for (Command s : kSuites) {
        const auto records = read_summary(config.out / to_string(s) / "summary.jsonl");
        body += "\n## " + to_string(s) + "\n\n| check | value | tolerance | result |\n|---|---|---|---|\n";
        for (const Check& r : records) {
            ++total;
            if (!r.pass) ++failed;
            const std::string tol = r.tolerance ? short_number(*r.tolerance) : "";
            const std::string result = r.pass ? (r.tolerance ? "pass" : "info") : "**FAIL**";
            body += "| " + r.name + " | " + short_number(r.value) + " | " + tol + " | " + result + " |\n";
            csv << to_string(s) << ',' << r.name << ',' << (std::isnan(r.value) ? "" : fmt17(r.value)) << ','
                << (r.tolerance ? fmt17(*r.tolerance) : "") << ',' << (r.pass ? 1 : 0) << '\n';
        }
    }
    md << "# stereodual report\n\n"
       << (failed == 0 ? "All checks passed" : std::to_string(failed) + " of " + std::to_string(total) + " checks failed")
       << " (" << total << " records).\n"
       << body;

    log << (failed == 0 ? "all checks passed" : std::to_string(failed) + " checks failed") << "; wrote "
        << (dir / "report.md").string() << '\n';
    return failed == 0;
}

}  // namespace stereodual::cli
