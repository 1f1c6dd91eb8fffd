#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace forcelab {

/// A value of T or +infinity. Infinity compares greater than every finite value.
template <class T>
class Extended {
public:
    constexpr Extended() = default;  // infinity
    constexpr Extended(T value) : value_(value) {}  // NOLINT(implicit)

    static constexpr Extended infinity() { return Extended{}; }

    constexpr bool is_finite() const noexcept { return value_.has_value(); }
    constexpr bool is_infinite() const noexcept { return !value_.has_value(); }

    constexpr const T& value() const {
        if (!value_) throw std::logic_error("Extended::value() on infinity");
        return *value_;
    }

    friend constexpr bool operator==(const Extended& a, const Extended& b) {
        return a.value_ == b.value_;
    }
    friend constexpr auto operator<=>(const Extended& a, const Extended& b)
        -> std::compare_three_way_result_t<T> {
        if (a.is_infinite() || b.is_infinite()) {
            if (a.is_infinite() && b.is_infinite()) return std::compare_three_way_result_t<T>::equivalent;
            return a.is_infinite() ? std::compare_three_way_result_t<T>::greater
                                   : std::compare_three_way_result_t<T>::less;
        }
        return *a.value_ <=> *b.value_;
    }

    friend constexpr Extended operator+(const Extended& a, const Extended& b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return Extended(*a.value_ + *b.value_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Extended& e) {
        if (e.is_infinite()) return os << "inf";
        return os << *e.value_;
    }

private:
    std::optional<T> value_;
};

/// ℕ ∪ {∞}: propagation times, distances, eccentricities.
using ExtNat = Extended<std::uint32_t>;

}  // namespace forcelab
