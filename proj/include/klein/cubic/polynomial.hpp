#pragma once

// Sparse polynomials in x1..x5 over an exact field, terms kept sorted by
// decreasing graded reverse lexicographic order.  The field is a small policy
// object so that the same code runs over Q and over F_p.

#include "klein/arith/integer.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace klein {

inline constexpr int kVars = 5;
using Monomial = std::array<int, kVars>;

inline int degree(const Monomial& m)
{
    int d = 0;
    for (int e : m) d += e;
    return d;
}

/// a > b in grevlex.
inline bool grevlex_greater(const Monomial& a, const Monomial& b)
{
    const int da = degree(a), db = degree(b);
    if (da != db) return da > db;
    for (int i = kVars - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

inline bool monomial_divides(const Monomial& a, const Monomial& b)
{
    for (int i = 0; i < kVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b)
{
    Monomial m;
    for (int i = 0; i < kVars; ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b)
{
    Monomial m;
    for (int i = 0; i < kVars; ++i) m[i] = a[i] + b[i];
    return m;
}

/// b / a, assuming a | b.
inline Monomial monomial_div(const Monomial& b, const Monomial& a)
{
    Monomial m;
    for (int i = 0; i < kVars; ++i) m[i] = b[i] - a[i];
    return m;
}

inline bool coprime(const Monomial& a, const Monomial& b)
{
    for (int i = 0; i < kVars; ++i)
        if (a[i] && b[i]) return false;
    return true;
}

/// Index of the variable if m is a pure power x_i^k with k >= 1, else -1.
inline int pure_power_variable(const Monomial& m)
{
    int var = -1;
    for (int i = 0; i < kVars; ++i) {
        if (m[i] == 0) continue;
        if (var >= 0) return -1;
        var = i;
    }
    return var;
}

/// "x1^2*x2"; "1" for the empty monomial.
std::string format_monomial(const Monomial& m);
/// Inverse of format_monomial (variables x1..x5, any order, repeats allowed).
/// Throws ParseError.
Monomial parse_monomial(const std::string& text);

struct RationalField {
    using T = Rat;
    T from_rat(const Rat& x) const { return x; }
    T from_int(long x) const { return Rat(x); }
    bool is_zero(const T& x) const { return x == 0; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T inv(const T& a) const { return 1 / a; }
};

/// F_p for a prime p < 2^32.
struct PrimeField {
    using T = std::uint64_t;
    std::uint64_t p;

    /// Throws std::invalid_argument unless prime is a prime below 2^32.
    explicit PrimeField(std::uint64_t prime) : p(prime)
    {
        bool ok = p >= 2 && p < (std::uint64_t{1} << 32);
        for (std::uint64_t d = 2; ok && d * d <= p; ++d) ok = p % d != 0;
        if (!ok) throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^32");
    }

    /// Throws ArithmeticError if p divides the denominator.
    T from_rat(const Rat& x) const
    {
        const Int pp(static_cast<unsigned long>(p));
        Int den = x.get_den() % pp;
        if (den == 0) throw ArithmeticError("denominator vanishes mod p");
        Int num = x.get_num() % pp;
        if (num < 0) num += pp;
        return mul(num.get_ui(), inv(den.get_ui()));
    }
    T from_int(long x) const { return from_rat(Rat(x)); }
    bool is_zero(T x) const { return x == 0; }
    T add(T a, T b) const { return (a + b) % p; }
    T sub(T a, T b) const { return (a + p - b) % p; }
    T mul(T a, T b) const { return (a * b) % p; }
    T inv(T a) const
    {
        if (a == 0) throw ArithmeticError("inverse of zero mod p");
        T r = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
};

template <class F>
struct Term {
    Monomial m;
    typename F::T c;
};

template <class F>
using Poly = std::vector<Term<F>>;  // decreasing grevlex, no zero coefficients

template <class F>
Poly<F> poly_add_scaled(const F& f, const Poly<F>& a, const Poly<F>& b, const typename F::T& s,
                        const Monomial& shift)
{
    // a + s * shift * b
    Poly<F> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        const Monomial mb = monomial_mul(b[j].m, shift);
        if (i == a.size() || grevlex_greater(mb, a[i].m)) {
            out.push_back({mb, f.mul(s, b[j].c)});
            ++j;
        } else if (grevlex_greater(a[i].m, mb)) {
            out.push_back(a[i++]);
        } else {
            auto c = f.add(a[i].c, f.mul(s, b[j].c));
            if (!f.is_zero(c)) out.push_back({mb, c});
            ++i;
            ++j;
        }
    }
    return out;
}

template <class F>
Poly<F> poly_add(const F& f, const Poly<F>& a, const Poly<F>& b)
{
    return poly_add_scaled(f, a, b, f.from_int(1), Monomial{});
}

template <class F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b)
{
    Poly<F> out;
    for (const auto& t : a) out = poly_add_scaled(f, out, b, t.c, t.m);
    return out;
}

template <class F>
void make_monic(const F& f, Poly<F>& p)
{
    if (p.empty()) return;
    const auto inv = f.inv(p.front().c);
    for (auto& t : p) t.c = f.mul(t.c, inv);
}

/// Builds a polynomial from unsorted terms, merging repeats.
template <class F>
Poly<F> make_poly(const F& f, std::vector<Term<F>> terms)
{
    Poly<F> out;
    for (auto& t : terms)
        if (!f.is_zero(t.c)) out = poly_add(f, out, Poly<F>{t});
    return out;
}

}  // namespace klein
