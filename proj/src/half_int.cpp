#include "stereodual/half_int.hpp"

#include <cmath>
#include <stdexcept>

namespace stereodual {

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(const std::string& text) {
    const auto slash = text.find('/');
    std::size_t used = 0;
    try {
        if (slash != std::string::npos) {
            const int num = std::stoi(text.substr(0, slash), &used);
            if (used != slash || text.substr(slash + 1) != "2") throw std::invalid_argument(text);
            return from_twice(num);
        }
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        const double twice = 2.0 * v;
        if (std::abs(twice - std::round(twice)) > 1e-12) throw std::invalid_argument(text);
        return from_twice(static_cast<int>(std::lround(twice)));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("not an integer or half-integer: '" + text + "'");
    }
}

}  // namespace stereodual
