#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "forcelab/error.hpp"

namespace forcelab {

namespace detail {
__extension__ typedef __int128 int128_t;
__extension__ typedef unsigned __int128 uint128_t;
}  // namespace detail

/// Exact rational with 64-bit numerator and positive denominator, always reduced.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t num) : num_(num), den_(1) {}  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den);

    /// Accepts "3", "-2", "1/2", "0.25". Throws ParseError.
    static Rational parse(std::string_view text);

    constexpr std::int64_t num() const noexcept { return num_; }
    constexpr std::int64_t den() const noexcept { return den_; }
    constexpr bool is_integer() const noexcept { return den_ == 1; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Largest integer <= *this / smallest integer >= *this.
    std::int64_t floor() const noexcept;
    std::int64_t ceil() const noexcept;

    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend constexpr bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        const detail::int128_t lhs = static_cast<detail::int128_t>(a.num_) * b.den_;
        const detail::int128_t rhs = static_cast<detail::int128_t>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace forcelab
