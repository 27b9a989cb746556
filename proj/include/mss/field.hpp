#pragma once

#include <cstdint>
#include <ostream>

namespace mss {

// Residue class mod 3, stored as 0, 1 or 2.
struct F3 {
    std::uint8_t v = 0;

    constexpr F3() = default;
    constexpr F3(int x) : v(static_cast<std::uint8_t>(((x % 3) + 3) % 3)) {}

    static constexpr F3 raw(std::uint8_t r) {
        F3 f;
        f.v = r;
        return f;
    }

    constexpr bool zero() const { return v == 0; }
    constexpr explicit operator bool() const { return v != 0; }

    // representative in {-1, 0, 1}
    constexpr int balanced() const { return v == 2 ? -1 : v; }

    constexpr F3 operator-() const { return raw(v == 0 ? 0 : std::uint8_t(3 - v)); }
    constexpr F3 inv() const { return *this; }  // 1*1 = 2*2 = 1

    friend constexpr F3 operator+(F3 a, F3 b) {
        std::uint8_t s = a.v + b.v;
        return raw(s >= 3 ? s - 3 : s);
    }
    friend constexpr F3 operator-(F3 a, F3 b) { return a + (-b); }
    friend constexpr F3 operator*(F3 a, F3 b) {
        std::uint8_t p = a.v * b.v;
        return raw(p == 4 ? 1 : p);
    }
    friend constexpr F3 operator/(F3 a, F3 b) { return a * b.inv(); }
    constexpr F3& operator+=(F3 b) { return *this = *this + b; }
    constexpr F3& operator-=(F3 b) { return *this = *this - b; }
    constexpr F3& operator*=(F3 b) { return *this = *this * b; }

    friend constexpr bool operator==(F3 a, F3 b) { return a.v == b.v; }
    friend constexpr bool operator!=(F3 a, F3 b) { return a.v != b.v; }

    friend std::ostream& operator<<(std::ostream& os, F3 a) { return os << int(a.v); }
};

inline constexpr F3 kHalf = F3(2);  // inverse of 2

// (-1)^e
inline constexpr F3 sign(int e) { return (e & 1) ? F3(-1) : F3(1); }

}  // namespace mss
