#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>

namespace resolvent {

/// Walk or path length over the naturals extended with infinity.
///
/// Infinity compares greater than every finite length, so std::max is
/// absorbing and std::min ignores it. Addition involving infinity yields
/// infinity. value() on an infinite distance throws.
class Distance {
public:
    constexpr Distance() noexcept = default;
    constexpr explicit Distance(std::uint32_t length) noexcept : length_(length) {}

    static constexpr Distance infinity() noexcept
    {
        Distance d;
        d.length_ = kInfinite;
        return d;
    }

    [[nodiscard]] constexpr bool is_finite() const noexcept { return length_ != kInfinite; }
    [[nodiscard]] constexpr bool is_infinite() const noexcept { return length_ == kInfinite; }

    [[nodiscard]] std::uint32_t value() const;

    friend constexpr auto operator<=>(Distance, Distance) noexcept = default;
    friend constexpr bool operator==(Distance, Distance) noexcept = default;

    friend constexpr Distance operator+(Distance a, Distance b) noexcept
    {
        if (a.is_infinite() || b.is_infinite())
            return infinity();
        return Distance(a.length_ + b.length_);
    }

private:
    static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t length_ = 0;
};

std::ostream& operator<<(std::ostream& os, Distance d);

}  // namespace resolvent
