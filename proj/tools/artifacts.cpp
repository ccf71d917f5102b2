#include "artifacts.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace stereodual::cli {

void Summary::check(const std::string& name, double value, double tolerance) {
    records_.push_back({name, value, tolerance, std::isfinite(value) && value < tolerance});
}

void Summary::note(const std::string& name, double value) { records_.push_back({name, value, std::nullopt, true}); }

bool Summary::all_passed() const {
    return std::all_of(records_.begin(), records_.end(), [](const Check& c) { return c.pass; });
}

void Summary::write(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (const Check& c : records_) {
        nlohmann::ordered_json j;
        j["name"] = c.name;
        j["value"] = std::isfinite(c.value) ? nlohmann::ordered_json(c.value) : nlohmann::ordered_json(nullptr);
        j["tolerance"] = c.tolerance ? nlohmann::ordered_json(*c.tolerance) : nlohmann::ordered_json(nullptr);
        j["pass"] = c.pass;
        out << j.dump() << '\n';
    }
}

std::vector<Check> read_summary(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::vector<Check> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto j = nlohmann::json::parse(line);
        Check c;
        c.name = j.at("name").get<std::string>();
        c.value = j.at("value").is_null() ? std::nan("") : j.at("value").get<double>();
        if (!j.at("tolerance").is_null()) c.tolerance = j.at("tolerance").get<double>();
        c.pass = j.at("pass").get<bool>();
        out.push_back(std::move(c));
    }
    return out;
}

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_real(const std::string& text) {
    const auto slash = text.find('/');
    auto whole = [&](const std::string& part) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (part.empty() || used != part.size() || !std::isfinite(v))
            throw std::invalid_argument("not a number: '" + text + "'");
        return v;
    };
    if (slash == std::string::npos) return whole(text);
    const double den = whole(text.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return whole(text.substr(0, slash)) / den;
}

std::size_t CsvTable::column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw std::out_of_range("no column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    auto split = [](const std::string& line) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        return cells;
    };
    CsvTable t;
    std::string line;
    if (std::getline(in, line)) t.header = split(line);
    while (std::getline(in, line))
        if (!line.empty()) t.rows.push_back(split(line));
    return t;
}

}  // namespace stereodual::cli
