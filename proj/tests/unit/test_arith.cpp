#include "klein/arith/cyclotomic.hpp"
#include "klein/arith/quadratic.hpp"
#include "klein/arith/scalar_text.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

using namespace klein;
using klein::testing::Gen;

namespace {

using Cx = std::complex<long double>;

// Numerical value at zeta = exp(2 pi i / 11); the oracle for the exact code.
Cx numeric(const CycElem& x)
{
    const Cx zeta = std::polar(1.0L, 2.0L * std::numbers::pi_v<long double> / 11.0L);
    Cx sum = 0, p = 1;
    for (int i = 0; i < CycElem::kDegree; ++i) {
        sum += static_cast<long double>(x.coeff(i).get_d()) * p;
        p *= zeta;
    }
    return sum;
}

Cx numeric(const QuadRat& q)
{
    const Cx nu(-0.5L, std::sqrt(11.0L) / 2.0L);
    return static_cast<long double>(q.a().get_d()) + static_cast<long double>(q.b().get_d()) * nu;
}

bool close(Cx a, Cx b) { return std::abs(a - b) < 1e-9L * (1 + std::abs(b)); }

CycElem random_cyc(Gen& g)
{
    CycElem::Coeffs c;
    for (auto& v : c) v = make_rat(Int(g.range(-5, 5)), Int(g.range(1, 3)));
    return CycElem(c);
}

}  // namespace

TEST_CASE("zeta is a primitive 11th root of unity")
{
    CHECK(CycElem::zeta(1) * CycElem::zeta(10) == CycElem(1));
    CHECK(CycElem::zeta(11) == CycElem(1));
    CHECK(CycElem::zeta(-1) == CycElem::zeta(10));
    CycElem s;
    for (int k = 0; k < 11; ++k) s += CycElem::zeta(k);
    CHECK(s.is_zero());
    for (int k = 1; k < 11; ++k) CHECK(CycElem::zeta(k) != CycElem(1));
}

TEST_CASE("nu embeds as the Gauss period and satisfies its minimal polynomial")
{
    const CycElem nu = embed_nu(QuadRat::nu());
    CHECK(nu == CycElem::zeta(1) + CycElem::zeta(3) + CycElem::zeta(4) + CycElem::zeta(5) + CycElem::zeta(9));
    CHECK(nu * nu == embed_nu(QuadRat(-3, -1)));
    CHECK(nu * nu + nu + CycElem(3) == CycElem(0));
    CHECK(embed_nu(QuadRat(1)) == CycElem(1));
    CHECK(nu.conj() == embed_nu(QuadRat(-1, -1)));
    const CycElem s = embed_nu(QuadRat(one_plus_two_nu()));
    CHECK(s * s.conj() == CycElem(11));
    CHECK(one_plus_two_nu().norm() == 11);
    CHECK(close(numeric(nu), numeric(QuadRat::nu())));
}

TEST_CASE("projection back to Q(nu)")
{
    CHECK_FALSE(try_project(CycElem::zeta(1)).has_value());
    CHECK_THROWS_AS(project_nu(CycElem::zeta(1)), ArithmeticError);
    Gen g(11);
    for (int t = 0; t < 50; ++t) {
        const QuadRat q(make_rat(Int(g.range(-9, 9)), Int(g.range(1, 5))), make_rat(Int(g.range(-9, 9)), Int(g.range(1, 5))));
        CHECK(project_nu(embed_nu(q)) == q);
    }
}

TEST_CASE("field axioms and conjugation against the numerical embedding")
{
    Gen g(3);
    for (int t = 0; t < 40; ++t) {
        const CycElem x = random_cyc(g), y = random_cyc(g), z = random_cyc(g);
        CHECK(close(numeric(x * y), numeric(x) * numeric(y)));
        CHECK(close(numeric(x.conj()), std::conj(numeric(x))));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK(x.conj().conj() == x);
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == CycElem(1));
            // the norm is the product of the ten conjugates
            Cx prod = 1;
            for (int a = 1; a < 11; ++a) prod *= numeric(x.galois(a));
            CHECK(close(Cx(static_cast<long double>(x.norm().get_d())), prod));
        }
    }
}

TEST_CASE("embed_nu is a ring homomorphism")
{
    Gen g(5);
    for (int t = 0; t < 40; ++t) {
        const QuadRat p(Rat(g.range(-7, 7)), make_rat(Int(g.range(-7, 7)), Int(g.range(1, 4))));
        const QuadRat q(make_rat(Int(g.range(-7, 7)), Int(g.range(1, 4))), Rat(g.range(-7, 7)));
        CHECK(embed_nu(p * q) == embed_nu(p) * embed_nu(q));
        CHECK(embed_nu(p + q) == embed_nu(p) + embed_nu(q));
        CHECK(embed_nu(p.conj()) == embed_nu(p).conj());
        CHECK(close(numeric(p * q), numeric(p) * numeric(q)));
    }
}

TEST_CASE("Euclidean division examples")
{
    const QuadDivRem d = quad_div_rem(QuadInt(11), one_plus_two_nu());
    CHECK(d.remainder.is_zero());
    CHECK(d.quotient * one_plus_two_nu() == QuadInt(11));
    CHECK(d.quotient == one_plus_two_nu().conj());

    const QuadInt x(Int(7), Int(-4));
    CHECK(quad_div_rem(x, QuadInt(1)).quotient == x);
    CHECK(quad_div_rem(x, QuadInt(1)).remainder.is_zero());

    // (nu, 2): every remainder candidate in nu + 2 Z[nu] near nu has norm >= 3
    const QuadDivRem e = quad_div_rem(QuadInt::nu(), QuadInt(2));
    CHECK(e.quotient * QuadInt(2) + e.remainder == QuadInt::nu());
    CHECK(e.remainder.norm() < 4);
    Int best = -1;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            const Int n = (QuadInt::nu() - QuadInt(Int(a), Int(b)) * QuadInt(2)).norm();
            if (best < 0 || n < best) best = n;
        }
    CHECK(e.remainder.norm() == best);

    CHECK_THROWS(quad_div_rem(x, QuadInt(0)));
}

TEST_CASE("Euclidean property on |a|,|b| <= 20 against divisors in a smaller box")
{
    long cases = 0, bad = 0;
    for (long ya = -3; ya <= 3; ++ya)
        for (long yb = -3; yb <= 3; ++yb) {
            const QuadInt y{Int(ya), Int(yb)};
            if (y.is_zero()) continue;
            for (long xa = -20; xa <= 20; ++xa)
                for (long xb = -20; xb <= 20; ++xb) {
                    const QuadInt x{Int(xa), Int(xb)};
                    const QuadDivRem d = quad_div_rem(x, y);
                    ++cases;
                    if (d.quotient * y + d.remainder != x || !(d.remainder.norm() < y.norm())) ++bad;
                }
        }
    CHECK(cases == 48 * 41 * 41);
    CHECK(bad == 0);
}

TEST_CASE("gcd normalization and examples")
{
    CHECK(quad_gcd(QuadInt(0), QuadInt(Int(-3), Int(-1))) == QuadInt(Int(3), Int(1)));
    CHECK(quad_gcd(QuadInt(0), QuadInt(Int(0), Int(-2))) == QuadInt(Int(0), Int(2)));
    CHECK(quad_gcd(QuadInt(11), one_plus_two_nu()) == one_plus_two_nu());
    CHECK_THROWS(quad_gcd(QuadInt(0), QuadInt(0)));

    // (2, nu): enumerate all elements of norm <= 4 dividing both
    const QuadInt g = quad_gcd(QuadInt(2), QuadInt::nu());
    CHECK(g == QuadInt(1));
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
            const QuadInt d{Int(a), Int(b)};
            if (d.is_zero() || d.norm() > 4) continue;
            if (divides(d, QuadInt(2)) && divides(d, QuadInt::nu())) CHECK(d.is_unit());
        }
}

TEST_CASE("gcd is maximal among small common divisors")
{
    Gen gen(17);
    for (int t = 0; t < 60; ++t) {
        const QuadInt x = gen.quad(6), y = gen.quad(6);
        if (x.is_zero() && y.is_zero()) continue;
        const QuadInt g = quad_gcd(x, y);
        CHECK(divides(g, x));
        CHECK(divides(g, y));
        for (long a = -4; a <= 4; ++a)
            for (long b = -4; b <= 4; ++b) {
                const QuadInt d{Int(a), Int(b)};
                if (!d.is_zero() && divides(d, x) && divides(d, y)) CHECK(divides(d, g));
            }
    }
}

TEST_CASE("reduction modulo 1+2nu")
{
    CHECK(reduce_mod_1p2nu(one_plus_two_nu()) == 0);
    CHECK(reduce_mod_1p2nu(QuadInt::nu()) == 5);
    CHECK(reduce_mod_1p2nu(QuadInt(11)) == 0);
    CHECK(reduce_mod_1p2nu(QuadInt(12)) == 1);
}

TEST_CASE("scalar text grammar")
{
    CHECK(parse_scalar("1+2*nu") == QuadRat(1, 2));
    CHECK(parse_scalar("-3/4") == QuadRat(make_rat(-3, 4), 0));
    CHECK(parse_scalar(" nu ") == QuadRat::nu());
    CHECK(parse_scalar("3/2 - 5*nu") == QuadRat(make_rat(3, 2), -5));
    CHECK_THROWS_AS(parse_scalar("nu*nu"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    try {
        parse_scalar("1+*nu");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }

    CHECK(format_scalar(QuadRat(0)) == "0");
    CHECK(format_scalar(QuadRat(1, 2)) == "1+2*nu");
    CHECK(format_scalar(QuadRat(0, -1)) == "-nu");
    CHECK(format_scalar(QuadRat(make_rat(3, 2), -5)) == "3/2-5*nu");

    Gen g(23);
    for (int t = 0; t < 100; ++t) {
        const QuadRat q(make_rat(Int(g.range(-30, 30)), Int(g.range(1, 9))), make_rat(Int(g.range(-30, 30)), Int(g.range(1, 9))));
        CHECK(parse_scalar(format_scalar(q)) == q);
    }
    const auto list = parse_scalar_list("1+2*nu,0,nu,-1/7,2");
    REQUIRE(list.size() == 5);
    CHECK(list[3] == QuadRat(make_rat(-1, 7)));
}
