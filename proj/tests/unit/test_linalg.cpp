#include "klein/linalg/f11_subspace.hpp"
#include "klein/linalg/hnf.hpp"
#include "klein/linalg/matrix.hpp"
#include "klein/period/lattice.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace klein;
using klein::testing::Gen;

namespace {

// Leibniz expansion; the oracle for the Bareiss determinant.
template <class T>
T leibniz(const Matrix<T>& m)
{
    std::vector<std::size_t> p(m.rows());
    std::iota(p.begin(), p.end(), 0);
    T sum(0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
        T term(1);
        for (std::size_t i = 0; i < p.size(); ++i) term = term * m(i, p[i]);
        if (inversions % 2)
            sum = sum - term;
        else
            sum = sum + term;
    } while (std::next_permutation(p.begin(), p.end()));
    return sum;
}

Matrix<F11> f11(std::initializer_list<std::initializer_list<long>> rows)
{
    Matrix<F11> m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (long v : r) m(i, j++) = F11(v);
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("Bareiss agrees with the Leibniz expansion")
{
    Gen g(1);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = static_cast<std::size_t>(g.range(1, 6));
        const Matrix<Int> m = g.int_matrix(n, n, 9);
        CHECK(det(m) == leibniz(m));
        const Matrix<QuadInt> q = g.quad_matrix(n, n, 3);
        CHECK(det(q) == leibniz(q));
    }
    // a zero leading pivot forces a row swap
    const Matrix<Int> swap{{0, 1, 2}, {3, 0, 1}, {1, 1, 0}};
    CHECK(det(swap) == leibniz(swap));
    CHECK(det(Matrix<Int>::identity(5)) == 1);
    CHECK_THROWS_AS(det(Matrix<Int>(2, 3)), LinalgError);
}

TEST_CASE("determinant is multiplicative and transpose invariant")
{
    Gen g(2);
    for (int t = 0; t < 20; ++t) {
        const Matrix<Int> a = g.int_matrix(5, 5, 4), b = g.int_matrix(5, 5, 4);
        CHECK(det(a * b) == det(a) * det(b));
        CHECK(det(a.transpose()) == det(a));
        const Matrix<Rat> r = klein::testing::to_rat(a);
        CHECK(det(r) == Rat(det(a)));
    }
}

TEST_CASE("the printed B lies in SL_5(Z[nu])")
{
    CHECK(det(printed_b_matrix()) == QuadRat(1));
}

TEST_CASE("A is a Vandermonde matrix in xi^w")
{
    // A(k, j) = x_j^k with x_j = xi^{w_j}, so det A = prod_{i<j} (x_j - x_i).
    const Matrix<CycElem> a = klein_a_matrix();
    CycElem expected(1);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            expected = expected * (CycElem::zeta(kKleinWeights[j]) - CycElem::zeta(kKleinWeights[i]));
    const CycElem d = det(a);
    CHECK(d == expected);
    CHECK_FALSE(d.is_zero());
    // the norm of the product of differences is a power of 11
    Rat n = d.norm();
    while (n != 1 && n.get_den() == 1 && n.get_num() % 11 == 0) n /= 11;
    CHECK(n == 1);
}

TEST_CASE("solve and inverse round trip")
{
    Gen g(4);
    const Matrix<Rat> id = Matrix<Rat>::identity(4);
    const Matrix<Rat> rhs = klein::testing::to_rat(g.int_matrix(4, 2, 5));
    CHECK(solve(id, rhs) == rhs);
    for (int t = 0; t < 20; ++t) {
        const Matrix<Rat> m = g.invertible_rat(5, 4);
        const Matrix<Rat> b = klein::testing::to_rat(g.int_matrix(5, 3, 5));
        CHECK(m * solve(m, b) == b);
        CHECK(m * inverse(m) == Matrix<Rat>::identity(5));
    }
    const Matrix<Rat> singular{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(inverse(singular), LinalgError);
    CHECK(rank(singular) == 1);
    const Matrix<Rat> ns = null_space(singular);
    CHECK((singular * ns).is_zero());
}

TEST_CASE("dual vectors reproduce tA^-1 A")
{
    CHECK(dual_vectors_v() == printed_dual_matrix());
    // entry (1,2): -nu/(1+2nu)
    CHECK(printed_dual_matrix()(0, 1) == -QuadRat::nu() / QuadRat(one_plus_two_nu()));
}

TEST_CASE("hnf over Z: small fixed cases")
{
    CHECK(hnf_z(Matrix<Rat>::identity(3)) == Matrix<Rat>::identity(3));
    // span of 2e1 and e1+e2: basis {e1 + e2 - e2 ... } in column HNF form
    const Matrix<Rat> g{{2, 1}, {0, 1}};
    const Matrix<Rat> h = hnf_z(g);
    // upper triangular, pivots positive, above-pivot entry reduced
    CHECK(h(1, 0) == 0);
    CHECK(h(0, 0) * h(1, 1) == 2);
    CHECK(h(0, 1) >= 0);
    CHECK(h(0, 1) < h(0, 0));
    CHECK(hnf_z(h) == h);
    // span of 2e1, 3e1, e2 is Z^2
    CHECK(hnf_z(Matrix<Rat>{{2, 3, 0}, {0, 0, 1}}) == Matrix<Rat>::identity(2));
    CHECK_THROWS_AS(hnf_z(Matrix<Rat>{{1, 2}, {2, 4}}), LinalgError);
    // rational generators
    const Matrix<Rat> half{{make_rat(1, 2), 0}, {0, 1}};
    CHECK(hnf_z(half) == half);
}

TEST_CASE("hnf over Z[nu]: the R0 and R1 presentations")
{
    const ZnuLattice lambda0 = build_lambda0();
    CHECK(lambda0.basis() == Matrix<QuadRat>::identity(5));
    CHECK(build_lambda4() == r1_lattice());
    // negating one generator does not change the canonical form
    Matrix<QuadRat> g = r1_generators();
    for (std::size_t i = 0; i < 5; ++i) g(i, 2) = -g(i, 2);
    CHECK(hnf_znu(g, one_plus_two_nu()) == r1_lattice().basis());
    CHECK_THROWS_AS(hnf_znu(Matrix<QuadRat>(5, 5), one_plus_two_nu()), LinalgError);
}

TEST_CASE("hnf over Z[nu] is invariant under SL(Z[nu]) changes of generators")
{
    Gen g(6);
    const Matrix<QuadRat> base = r1_generators();
    const Matrix<QuadRat> h = hnf_znu(base, one_plus_two_nu());
    for (int t = 0; t < 10; ++t) {
        const Matrix<QuadInt> u = g.unimodular_znu(5, 15);
        CHECK(hnf_znu(base * klein::testing::to_quad_rat(u), one_plus_two_nu()) == h);
    }
}

TEST_CASE("F11 invariant chains")
{
    const Matrix<F11> mhat = printed_mhat_t();
    const auto chain = invariant_chain_f11(mhat);
    REQUIRE(chain.size() == 5);
    for (std::size_t j = 0; j < 5; ++j) {
        CHECK(chain[j].dimension() == j);
        CHECK(chain[j].is_invariant_under(mhat));
        if (j) CHECK(chain[j].contains(chain[j - 1]));
    }
    // brute force over every subspace of F_11^4
    const auto all = all_invariant_subspaces(mhat);
    CHECK(all.size() == 5);
    for (const auto& w : all) CHECK(std::find(chain.begin(), chain.end(), w) != chain.end());

    CHECK_THROWS_AS(invariant_chain_f11(Matrix<F11>::identity(4)), LinalgError);

    const Matrix<F11> jordan = f11({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
    const auto jc = invariant_chain_f11(jordan);
    for (std::size_t j = 1; j < 5; ++j) {
        Matrix<F11> prefix(j, 4);
        for (std::size_t i = 0; i < j; ++i) prefix(i, i) = F11(1);
        CHECK(jc[j] == F11Subspace::span(4, prefix));
    }
}

TEST_CASE("F11 arithmetic")
{
    for (int v = 1; v < 11; ++v) CHECK(F11(v) * F11(v).inverse() == F11(1));
    CHECK(F11(-1) == F11(10));
    CHECK(F11(5) + F11(7) == F11(1));
}
