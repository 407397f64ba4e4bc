#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "lsk/errors.hpp"

namespace lsk {

// Exact half-integer: stores twice the value. Every lattice coordinate and
// polynomial exponent in the library is a HalfInt, so half-integers coming
// from odd linking numbers never touch floating point.
struct HalfInt {
    std::int64_t tw = 0;  // twice the value

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t twice) : tw(twice) {}

    static constexpr HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }
    static constexpr HalfInt halves(std::int64_t twice) { return HalfInt(twice); }

    constexpr bool is_integer() const { return tw % 2 == 0; }

    // Value as an integer; caller must know it is integral.
    constexpr std::int64_t as_integer() const { return tw / 2; }

    constexpr std::int64_t floor() const {
        return (tw >= 0) ? tw / 2 : (tw - 1) / 2;
    }
    constexpr std::int64_t ceil() const {
        return (tw >= 0) ? (tw + 1) / 2 : tw / 2;
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.tw + b.tw); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.tw - b.tw); }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.tw); }
    friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return HalfInt(k * a.tw); }
    HalfInt& operator+=(HalfInt b) { tw += b.tw; return *this; }
    HalfInt& operator-=(HalfInt b) { tw -= b.tw; return *this; }

    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    std::string str() const {
        if (is_integer()) return std::to_string(tw / 2);
        return std::to_string(tw) + "/2";
    }
};

inline constexpr HalfInt half(std::int64_t numerator) { return HalfInt(numerator); }

// Lattice point of the affine lattice indexing link Alexander gradings.
struct LatticePoint {
    HalfInt s1, s2;
    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
    std::string str() const { return "(" + s1.str() + ", " + s2.str() + ")"; }
};

}  // namespace lsk
