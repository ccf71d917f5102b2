#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace stereodual::cli {

/// One JSON-lines summary record.
struct Check {
    std::string name;
    double value = 0.0;
    std::optional<double> tolerance;  // informational records carry none
    bool pass = true;
};

class Summary {
public:
    /// Passes when value is finite and below tolerance.
    void check(const std::string& name, double value, double tolerance);
    /// Informational record; never fails.
    void note(const std::string& name, double value);

    bool all_passed() const;
    const std::vector<Check>& records() const noexcept { return records_; }
    void write(const std::filesystem::path& path) const;

private:
    std::vector<Check> records_;
};

std::vector<Check> read_summary(const std::filesystem::path& path);

/// %.17g
std::string fmt17(double v);

/// Decimal or fraction ("0.25", "-3/2"); throws std::invalid_argument.
double parse_real(const std::string& text);

/// Comma-separated text table.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    /// Index of a header column; throws std::out_of_range when absent.
    std::size_t column(const std::string& name) const;
};
CsvTable read_csv(const std::filesystem::path& path);

/// f(0..n-1) evaluated in contiguous chunks on up to `threads` workers;
/// results are stored by index, so the output is independent of scheduling.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, unsigned threads, F f) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<R> out(n);
    const std::size_t chunk = (n + threads - 1) / std::max<std::size_t>(threads, 1);
    std::vector<std::future<void>> jobs;
    for (std::size_t begin = 0; begin < n; begin += chunk) {
        const std::size_t end = std::min(n, begin + chunk);
        jobs.push_back(std::async(std::launch::async, [&, begin, end] {
            for (std::size_t i = begin; i < end; ++i) out[i] = f(i);
        }));
    }
    for (auto& j : jobs) j.get();
    return out;
}

}  // namespace stereodual::cli
