#pragma once

#include <ostream>

namespace klein {

/// Residue in the field with 11 elements.
class F11 {
public:
    static constexpr int kP = 11;

    constexpr F11() = default;
    constexpr F11(long v) : v_(static_cast<int>(((v % kP) + kP) % kP)) {}

    constexpr int value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    constexpr F11 inverse() const
    {
        // Fermat: v^(p-2).
        int r = 1;
        for (int i = 0; i < kP - 2; ++i) r = (r * v_) % kP;
        return F11(r);
    }

    constexpr F11 operator-() const { return F11(-v_); }
    constexpr F11& operator+=(F11 o) { v_ = (v_ + o.v_) % kP; return *this; }
    constexpr F11& operator-=(F11 o) { v_ = (v_ - o.v_ + kP) % kP; return *this; }
    constexpr F11& operator*=(F11 o) { v_ = (v_ * o.v_) % kP; return *this; }
    constexpr F11& operator/=(F11 o) { return *this *= o.inverse(); }

    friend constexpr F11 operator+(F11 a, F11 b) { return a += b; }
    friend constexpr F11 operator-(F11 a, F11 b) { return a -= b; }
    friend constexpr F11 operator*(F11 a, F11 b) { return a *= b; }
    friend constexpr F11 operator/(F11 a, F11 b) { return a /= b; }
    friend constexpr bool operator==(F11 a, F11 b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(F11 a, F11 b) { return a.v_ != b.v_; }

private:
    int v_ = 0;
};

inline F11 divexact(F11 a, F11 b) { return a / b; }

inline std::ostream& operator<<(std::ostream& os, F11 x) { return os << x.value(); }

}  // namespace klein
