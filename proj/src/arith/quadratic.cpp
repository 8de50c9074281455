#include "klein/arith/quadratic.hpp"

#include "klein/arith/scalar_text.hpp"

#include <array>

namespace klein {

QuadInt QuadRat::to_quad_int() const
{
    if (!is_integral()) throw ArithmeticError("element of Q(nu) is not in Z[nu]");
    return QuadInt(a_.get_num(), b_.get_num());
}

QuadRat QuadRat::inverse() const
{
    if (is_zero()) throw ArithmeticError("division by zero in Q(nu)");
    Rat n = norm();
    QuadRat c = conj();
    return QuadRat(c.a() / n, c.b() / n);
}

QuadDivRem quad_div_rem(const QuadInt& x, const QuadInt& y)
{
    if (y.is_zero()) throw ArithmeticError("division by zero in Z[nu]");
    Int n = y.norm();
    QuadInt num = x * y.conj();
    Rat s = make_rat(num.a(), n);
    Rat t = make_rat(num.b(), n);
    Int qa = round_nearest(s);
    Int qb = round_nearest(t);

    // Residual fractional part f = x/y - (qa + qb*nu); pick the offset o
    // minimizing N(f - o).  Scan order fixes ties.
    Rat fa = s - qa;
    Rat fb = t - qb;
    static constexpr std::array<std::pair<int, int>, 9> offsets{
        {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}}};
    int best = 0;
    Rat best_norm;
    for (int i = 0; i < 9; ++i) {
        QuadRat f(fa - offsets[i].first, fb - offsets[i].second);
        Rat fn = f.norm();
        if (i == 0 || fn < best_norm) {
            best = i;
            best_norm = fn;
        }
    }
    QuadInt q(qa + offsets[best].first, qb + offsets[best].second);
    QuadInt r = x - q * y;
    if (!(r.norm() < n)) throw ArithmeticError("Euclidean division failed");
    return {std::move(q), std::move(r)};
}

QuadInt divexact(const QuadInt& x, const QuadInt& y)
{
    auto [q, r] = quad_div_rem(x, y);
    if (!r.is_zero()) throw ArithmeticError("inexact division in Z[nu]");
    return q;
}

bool divides(const QuadInt& d, const QuadInt& x)
{
    if (d.is_zero()) return x.is_zero();
    return quad_div_rem(x, d).remainder.is_zero();
}

bool is_canonical_positive(const QuadInt& x) { return x.a() > 0 || (x.a() == 0 && x.b() > 0); }
bool is_canonical_positive(const QuadRat& x) { return x.a() > 0 || (x.a() == 0 && x.b() > 0); }

int unit_normalizer(const QuadInt& x) { return (x.is_zero() || is_canonical_positive(x)) ? 1 : -1; }
int unit_normalizer(const QuadRat& x) { return (x.is_zero() || is_canonical_positive(x)) ? 1 : -1; }

QuadInt quad_gcd(const QuadInt& x, const QuadInt& y)
{
    if (x.is_zero() && y.is_zero()) throw ArithmeticError("gcd(0, 0) is undefined");
    QuadInt a = x;
    QuadInt b = y;
    while (!b.is_zero()) {
        QuadInt r = quad_div_rem(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return unit_normalizer(a) == 1 ? a : -a;
}

int reduce_mod_1p2nu(const QuadInt& x)
{
    Int v = x.a() + 5 * x.b();
    Int m;
    mpz_fdiv_r_ui(m.get_mpz_t(), v.get_mpz_t(), 11);
    return static_cast<int>(m.get_si());
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x) { return os << format_scalar(QuadRat(x)); }
std::ostream& operator<<(std::ostream& os, const QuadRat& x) { return os << format_scalar(x); }

}  // namespace klein
