#pragma once

#include <compare>
#include <cstdlib>
#include <string>

namespace stereodual {

/// Integer or half-integer stored exactly as its double.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
    static constexpr HalfInt from_int(int n) { return HalfInt(2 * n); }

    constexpr int twice() const noexcept { return twice_; }
    constexpr double value() const noexcept { return 0.5 * twice_; }
    constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
    constexpr HalfInt abs() const noexcept { return HalfInt(twice_ < 0 ? -twice_ : twice_); }

    constexpr HalfInt operator+(HalfInt o) const noexcept { return HalfInt(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const noexcept { return HalfInt(twice_ - o.twice_); }
    constexpr auto operator<=>(const HalfInt&) const = default;

    /// "3", "-1/2", ...
    std::string str() const;

    /// Parses "1", "-3/2", "0.5"; throws std::invalid_argument otherwise.
    static HalfInt parse(const std::string& text);

private:
    constexpr explicit HalfInt(int twice) : twice_(twice) {}
    int twice_ = 0;
};

}  // namespace stereodual
