#pragma once

#include <cstdint>

namespace mod3 {

// Scalar of the three-element field, stored as a residue in {0,1,2}.
class F3 {
public:
    constexpr F3() = default;
    constexpr explicit F3(long long n) : v_(static_cast<std::uint8_t>(((n % 3) + 3) % 3)) {}

    static constexpr F3 zero() { return F3(); }
    static constexpr F3 one() { return F3(1); }

    constexpr std::uint8_t value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr F3 operator+(F3 a, F3 b) { return F3((a.v_ + b.v_) % 3); }
    friend constexpr F3 operator-(F3 a, F3 b) { return F3((a.v_ + 3 - b.v_) % 3); }
    friend constexpr F3 operator*(F3 a, F3 b) { return F3((a.v_ * b.v_) % 3); }
    constexpr F3 operator-() const { return F3((3 - v_) % 3); }

    F3& operator+=(F3 o) { return *this = *this + o; }
    F3& operator-=(F3 o) { return *this = *this - o; }
    F3& operator*=(F3 o) { return *this = *this * o; }

    // 1 and 2 are their own inverses.
    constexpr F3 inverse() const { return *this; }

    friend constexpr bool operator==(F3 a, F3 b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(F3 a, F3 b) { return a.v_ != b.v_; }

private:
    std::uint8_t v_ = 0;
};

}  // namespace mod3
