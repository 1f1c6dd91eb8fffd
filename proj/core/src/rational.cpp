#include "forcelab/rational.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace forcelab {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = num / (g == 0 ? 1 : g);
    den_ = den / (g == 0 ? 1 : g);
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view part, std::size_t base_offset) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
            throw ParseError("invalid rational '" + std::string(text) + "'", base_offset);
        return v;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = parse_int(text.substr(0, slash), 0);
        const auto den = parse_int(text.substr(slash + 1), slash + 1);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view int_part = text.substr(0, dot);
        const std::string_view frac_part = text.substr(dot + 1);
        if (frac_part.empty() || frac_part.size() > 15 ||
            !std::all_of(frac_part.begin(), frac_part.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("invalid rational '" + std::string(text) + "'", dot + 1);
        const bool negative = !int_part.empty() && int_part.front() == '-';
        const std::string_view digits = negative ? int_part.substr(1) : int_part;
        const std::int64_t whole = digits.empty() ? 0 : parse_int(digits, negative ? 1 : 0);
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
        const std::int64_t frac = parse_int(frac_part, dot + 1);
        const Rational r(whole * scale + frac, scale);
        return negative ? Rational(0) - r : r;
    }
    return Rational(parse_int(text, 0));
}

std::int64_t Rational::floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {
Rational from_wide(detail::int128_t num, detail::int128_t den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    detail::int128_t a = num < 0 ? -num : num, b = den;
    while (b != 0) {
        const detail::int128_t t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
    if (num > kMax || -num > kMax || den > kMax) throw DomainError("rational overflow");
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}
}  // namespace

Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(static_cast<detail::int128_t>(a.num_) * b.den_ + static_cast<detail::int128_t>(b.num_) * a.den_,
                     static_cast<detail::int128_t>(a.den_) * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(static_cast<detail::int128_t>(a.num_) * b.den_ - static_cast<detail::int128_t>(b.num_) * a.den_,
                     static_cast<detail::int128_t>(a.den_) * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<detail::int128_t>(a.num_) * b.num_, static_cast<detail::int128_t>(a.den_) * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("rational division by zero");
    return from_wide(static_cast<detail::int128_t>(a.num_) * b.den_, static_cast<detail::int128_t>(a.den_) * b.num_);
}

}  // namespace forcelab
