#pragma once

// Arbitrary precision integers and rationals.
//
// Int and Rat are GMP's C++ classes; this header adds the handful of
// helpers the rest of the library needs (rounding, exact division,
// printing) so that callers never touch the C API directly.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace klein {

using Int = mpz_class;
using Rat = mpq_class;

class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Builds num/den in lowest terms with a positive denominator.
inline Rat make_rat(const Int& num, const Int& den)
{
    if (den == 0) throw ArithmeticError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int floor_rat(const Rat& r)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

/// Nearest integer, ties rounded up: floor(r + 1/2).
inline Int round_nearest(const Rat& r)
{
    Int num = 2 * r.get_num() + r.get_den();
    Int den = 2 * r.get_den();
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

/// Exact quotient; throws if b does not divide a.
inline Int divexact(const Int& a, const Int& b)
{
    if (b == 0) throw ArithmeticError("division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw ArithmeticError("inexact integer division");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Rat divexact(const Rat& a, const Rat& b)
{
    if (b == 0) throw ArithmeticError("division by zero");
    return a / b;
}

inline Int ipow(const Int& base, unsigned long exp)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int gcd(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b)
{
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rat& v) { return v.get_str(); }

/// True iff r is the square of a rational; the root goes to *root.
inline bool is_rational_square(const Rat& r, Rat* root = nullptr)
{
    if (r < 0) return false;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
        return false;
    if (root) {
        Int n, d;
        mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
        *root = make_rat(n, d);
    }
    return true;
}

}  // namespace klein
