#include "klein/period/lattice.hpp"
#include "klein/period/polarization.hpp"
#include "klein/period/vectors.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

using namespace klein;
using klein::testing::Gen;

namespace {

using Cx = std::complex<long double>;

const LatticeChain& chain()
{
    static const LatticeChain c = lattice_chain(build_quotient());
    return c;
}

std::vector<QuadRat> coords(std::initializer_list<QuadRat> c) { return {c}; }

// v-coordinates to numerical e-coordinates, straight from the definition of v_k.
std::array<Cx, 5> numeric_e(const std::vector<QuadRat>& v)
{
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    const Cx nu(-0.5L, std::sqrt(11.0L) / 2.0L);
    std::array<Cx, 5> e{};
    for (int k = 0; k < 5; ++k) {
        const Cx c = static_cast<long double>(v[k].a().get_d()) + static_cast<long double>(v[k].b().get_d()) * nu;
        for (int i = 0; i < 5; ++i) e[i] += c * std::polar(1.0L, two_pi * kKleinWeights[i] * k / 11.0L);
    }
    return e;
}

// E(z, w) = 2 Im(sum z conj w) / sqrt 11.
long double numeric_polarization(const std::vector<QuadRat>& z, const std::vector<QuadRat>& w)
{
    const auto ez = numeric_e(z), ew = numeric_e(w);
    Cx s = 0;
    for (int i = 0; i < 5; ++i) s += ez[i] * std::conj(ew[i]);
    return 2.0L * s.imag() / std::sqrt(11.0L);
}

// Pfaffian by expansion along the first row.
Rat pfaffian(const Matrix<Rat>& m)
{
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Rat sum = 0;
    for (std::size_t j = 1; j < n; ++j) {
        if (m(0, j) == 0) continue;
        Matrix<Rat> minor(n - 2, n - 2);
        std::vector<std::size_t> keep;
        for (std::size_t k = 1; k < n; ++k)
            if (k != j) keep.push_back(k);
        for (std::size_t a = 0; a < keep.size(); ++a)
            for (std::size_t b = 0; b < keep.size(); ++b) minor(a, b) = m(keep[a], keep[b]);
        const Rat term = m(0, j) * pfaffian(minor);
        sum += (j % 2 == 1) ? term : -term;
    }
    return sum;
}

}  // namespace

TEST_CASE("v_k vectors")
{
    const PeriodVector v0 = v_vector(0);
    for (const auto& c : v0.e) CHECK(c == CycElem(1));
    CHECK(v_vector(3) == v_vector(14));
    PeriodVector s;
    for (int k = 0; k <= 10; ++k) s += v_vector(k);
    CHECK(s.is_zero());
    CHECK(to_v_coords(v_vector(2)) == coords({0, 0, 1, 0, 0}));
    CHECK(to_v_coords(v_vector(5)) == coords({1, QuadRat(1, 1), -1, 1, QuadRat::nu()}));
}

TEST_CASE("nu v0 is v1 + v3 + v4 + v5 + v9")
{
    const PeriodVector lhs = embed_nu(QuadRat::nu()) * v_vector(0);
    const PeriodVector rhs = v_vector(1) + v_vector(3) + v_vector(4) + v_vector(5) + v_vector(9);
    CHECK(lhs == rhs);
    CHECK(to_v_coords(lhs) == coords({QuadRat::nu(), 0, 0, 0, 0}));
}

TEST_CASE("automorphism actions on v_k")
{
    const AutoMatrix tau = tau_matrix(), sigma = sigma_matrix();
    for (int k = 0; k < 11; ++k) {
        CHECK(apply_auto(tau, v_vector(k)) == v_vector(k + 1));
        CHECK(apply_auto(sigma, v_vector(k)) == v_vector(5 * k % 11));
    }
    CHECK(multiplicative_order(tau.m, 20) == 11);
    CHECK(multiplicative_order(sigma.m, 20) == 5);
    CHECK(is_unitary(tau.m));
    CHECK(is_unitary(sigma.m));

    Gen g(8);
    for (int t = 0; t < 5; ++t) {
        std::vector<QuadRat> c;
        for (int i = 0; i < 5; ++i) c.push_back(QuadRat(g.quad(4)));
        PeriodVector w = from_v_coords(c), x = w;
        for (int i = 0; i < 11; ++i) x = apply_auto(tau, x);
        CHECK(x == w);
        CHECK(to_v_coords(w) == c);
    }
    CHECK_THROWS_AS(to_v_coords(PeriodVector{{CycElem(1), CycElem(0), CycElem(0), CycElem(0), CycElem(0)}}),
                    ArithmeticError);
}

TEST_CASE("lattice identities")
{
    CHECK(build_lambda0() == r0_lattice());
    CHECK(lambda0_z_span_equals_r0());
    CHECK(build_lambda4() == r1_lattice());
    CHECK(stabilized_by_tau(build_lambda4()));

    const QuotientModel q = build_quotient();
    CHECK(q.mhat_t == printed_mhat_t());
    CHECK(q.mhat_w == printed_mhat_w());
    CHECK(quotient_is_consistent(q, build_lambda4()));
    for (const F11 x : q.phi(coords({1, 0, 0, 0, 0}))) CHECK(x.is_zero());
    CHECK_THROWS(q.phi(coords({make_rat(1, 2), 0, 0, 0, 0})));

    // last column of the t-basis matrix is (-1, 4, 5, 4)
    const Matrix<F11> t = printed_mhat_t();
    CHECK(t(0, 3) == F11(-1));
    CHECK(t(1, 3) == F11(4));
    CHECK(t(2, 3) == F11(5));
    CHECK(t(3, 3) == F11(4));
    // the w-basis matrix is I + superdiagonal
    Matrix<F11> bidiagonal = Matrix<F11>::identity(4);
    for (std::size_t i = 0; i + 1 < 4; ++i) bidiagonal(i, i + 1) = F11(1);
    CHECK(printed_mhat_w() == bidiagonal);
    const Matrix<F11> n = t - Matrix<F11>::identity(4);
    CHECK(power(n, 4).is_zero());
    CHECK_FALSE(power(n, 3).is_zero());
}

TEST_CASE("lattice chain")
{
    const auto& c = chain();
    CHECK(c.lattices[0] == build_lambda0());
    CHECK(c.lattices[2] == r2_lattice());
    CHECK(c.lattices[4] == build_lambda4());
    Int expected = 1;
    for (std::size_t j = 0; j < 5; ++j) {
        CHECK(lattice_index(c.lattices[j], c.lattices[0]) == expected);
        CHECK(stabilized_by_tau(c.lattices[j]));
        if (j) CHECK(c.lattices[j].contains(c.lattices[j - 1]));
        if (j) CHECK_FALSE(c.lattices[j - 1].contains(c.lattices[j]));
        expected *= 11;
    }
}

TEST_CASE("polarization is alternating and matches the numerical form")
{
    for (std::size_t j : {0u, 2u, 4u}) {
        const ZnuLattice& l = chain().lattices[j];
        const auto basis = z_basis(l);
        const Matrix<Rat> gram = gram_alternating(l, 1);
        for (std::size_t a = 0; a < 10; ++a) {
            CHECK(gram(a, a) == 0);
            for (std::size_t b = 0; b < 10; ++b) {
                CHECK(gram(a, b) == -gram(b, a));
                CHECK(std::abs(numeric_polarization(basis[a], basis[b]) - gram(a, b).get_d()) < 1e-9L);
            }
        }
    }
}

TEST_CASE("E is integral on Lambda_2 and not on Lambda_4")
{
    auto integral = [](const Matrix<Rat>& g) {
        for (std::size_t a = 0; a < g.rows(); ++a)
            for (std::size_t b = 0; b < g.cols(); ++b)
                if (!is_integer(g(a, b))) return false;
        return true;
    };
    CHECK(integral(gram_alternating(chain().lattices[0], 1)));
    CHECK(integral(gram_alternating(chain().lattices[2], 1)));
    CHECK_FALSE(integral(gram_alternating(chain().lattices[4], 1)));
}

TEST_CASE("Pfaffian table")
{
    const auto table = pfaffian_table(chain());
    REQUIRE(table.size() == 5);
    const Rat expected[5] = {14641, 121, 1, make_rat(1, 121), make_rat(1, 14641)};
    for (std::size_t j = 0; j < 5; ++j) {
        CHECK(table[j].at_a1 == expected[j]);
        CHECK(table[j].homogeneous);
        CHECK(table[j].is_square);
        // independent Pfaffian by cofactor expansion
        const Rat pf = pfaffian(gram_alternating(chain().lattices[j], 1));
        CHECK(pf * pf == table[j].at_a1);
    }
    const auto pairs = unimodular_pairs(table);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].first == 2);
    CHECK(pairs[0].second == 1);
    CHECK(pfaffian_squared(chain().lattices[2], 2) == 1024);
}

TEST_CASE("Hermitian invariance")
{
    const HermitianReport h = hermitian_invariance_check();
    CHECK(h.tau_dimension == 5);
    CHECK(h.group_dimension == 1);
    CHECK(h.tau_solutions_diagonal);
    CHECK(h.identity_invariant);
    CHECK(h.sigma_unitary);
    CHECK(h.tau_unitary);
}
