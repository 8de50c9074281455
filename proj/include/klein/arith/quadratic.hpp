#pragma once

// The ring Z[nu] and its fraction field Q(nu), where nu^2 + nu + 3 = 0,
// i.e. nu = (-1 + sqrt(-11)) / 2.  Z[nu] is norm-Euclidean; its only
// units are +1 and -1.

#include "klein/arith/integer.hpp"

#include <ostream>
#include <utility>

namespace klein {

class QuadRat;

/// a + b*nu with integer coordinates.
class QuadInt {
public:
    QuadInt() = default;
    QuadInt(long a) : a_(a) {}
    QuadInt(Int a) : a_(std::move(a)) {}
    QuadInt(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadInt nu() { return QuadInt(0, 1); }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_unit() const { return b_ == 0 && (a_ == 1 || a_ == -1); }

    /// a^2 - ab + 3b^2; nonnegative, zero only at 0.
    Int norm() const { return a_ * a_ - a_ * b_ + 3 * b_ * b_; }

    /// Complex conjugate: nu -> -1 - nu.
    QuadInt conj() const { return QuadInt(a_ - b_, -b_); }

    QuadInt operator-() const { return QuadInt(-a_, -b_); }
    QuadInt& operator+=(const QuadInt& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadInt& operator-=(const QuadInt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadInt& operator*=(const QuadInt& o)
    {
        Int bd = b_ * o.b_;
        Int na = a_ * o.a_ - 3 * bd;
        Int nb = a_ * o.b_ + b_ * o.a_ - bd;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }

    friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
    friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
    friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }
    friend bool operator==(const QuadInt& x, const QuadInt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QuadInt& x, const QuadInt& y) { return !(x == y); }

private:
    Int a_{0};
    Int b_{0};
};

/// a + b*nu with rational coordinates, always in lowest terms.
class QuadRat {
public:
    QuadRat() = default;
    QuadRat(long a) : a_(a) {}
    QuadRat(Rat a) : a_(std::move(a)) {}
    QuadRat(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}
    QuadRat(const QuadInt& q) : a_(q.a()), b_(q.b()) {}

    static QuadRat nu() { return QuadRat(0, 1); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_integral() const { return is_integer(a_) && is_integer(b_); }

    /// Throws ArithmeticError unless both coordinates are integers.
    QuadInt to_quad_int() const;

    Rat norm() const { return a_ * a_ - a_ * b_ + 3 * b_ * b_; }
    QuadRat conj() const { return QuadRat(a_ - b_, -b_); }
    QuadRat inverse() const;

    QuadRat operator-() const { return QuadRat(-a_, -b_); }
    QuadRat& operator+=(const QuadRat& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadRat& operator-=(const QuadRat& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadRat& operator*=(const QuadRat& o)
    {
        Rat bd = b_ * o.b_;
        Rat na = a_ * o.a_ - 3 * bd;
        Rat nb = a_ * o.b_ + b_ * o.a_ - bd;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    QuadRat& operator/=(const QuadRat& o) { return *this *= o.inverse(); }

    friend QuadRat operator+(QuadRat x, const QuadRat& y) { return x += y; }
    friend QuadRat operator-(QuadRat x, const QuadRat& y) { return x -= y; }
    friend QuadRat operator*(QuadRat x, const QuadRat& y) { return x *= y; }
    friend QuadRat operator/(QuadRat x, const QuadRat& y) { return x /= y; }
    friend bool operator==(const QuadRat& x, const QuadRat& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QuadRat& x, const QuadRat& y) { return !(x == y); }

private:
    Rat a_{0};
    Rat b_{0};
};

struct QuadDivRem {
    QuadInt quotient;
    QuadInt remainder;
};

/// x = q*y + r with N(r) < N(y).  The quotient is the nearest lattice point
/// to x/y (coordinatewise rounding, then the best of the nine neighbouring
/// candidates by norm), so r depends only on the class of x modulo y.
QuadDivRem quad_div_rem(const QuadInt& x, const QuadInt& y);

/// Exact quotient x/y; throws if y does not divide x.
QuadInt divexact(const QuadInt& x, const QuadInt& y);

bool divides(const QuadInt& d, const QuadInt& x);

inline QuadRat divexact(const QuadRat& x, const QuadRat& y) { return x / y; }

/// a > 0, or a == 0 and b > 0.
bool is_canonical_positive(const QuadInt& x);
bool is_canonical_positive(const QuadRat& x);

/// The unit u in {+1,-1} making u*x canonical-positive (1 for x = 0).
int unit_normalizer(const QuadInt& x);
int unit_normalizer(const QuadRat& x);

/// Euclidean gcd, unit-normalized.  gcd(0,0) throws.
QuadInt quad_gcd(const QuadInt& x, const QuadInt& y);

/// Z[nu] -> F_11 = Z[nu]/(1+2nu), nu -> 5.
int reduce_mod_1p2nu(const QuadInt& x);

std::ostream& operator<<(std::ostream& os, const QuadInt& x);
std::ostream& operator<<(std::ostream& os, const QuadRat& x);

/// 1 + 2nu, of norm 11; (1+2nu)^2 = -11.
inline QuadInt one_plus_two_nu() { return QuadInt(1, 2); }

}  // namespace klein
