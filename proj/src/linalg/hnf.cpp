#include "klein/linalg/hnf.hpp"

#include <algorithm>
#include <optional>

namespace klein {

namespace {

// Ring-specific hooks for the generic elimination below.

Int euclid_size(const Int& x) { return abs(x); }
Int euclid_size(const QuadInt& x) { return x.norm(); }

bool ring_is_zero(const Int& x) { return x == 0; }
bool ring_is_zero(const QuadInt& x) { return x.is_zero(); }

Int ring_quotient(const Int& x, const Int& y)
{
    // Floor division with a positive pivot gives remainders in [0, y).
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return q;
}
QuadInt ring_quotient(const QuadInt& x, const QuadInt& y) { return quad_div_rem(x, y).quotient; }

int ring_unit(const Int& x) { return x < 0 ? -1 : 1; }
int ring_unit(const QuadInt& x) { return unit_normalizer(x); }

template <class R>
void column_axpy(Matrix<R>& m, std::size_t dst, const R& q, std::size_t src)
{
    // col[dst] -= q * col[src]
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!ring_is_zero(m(i, src))) m(i, dst) -= q * m(i, src);
}

template <class R>
void negate_column(Matrix<R>& m, std::size_t j)
{
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = R(0) - m(i, j);
}

template <class R>
Matrix<R> column_hnf(Matrix<R> m)
{
    const std::size_t n = m.rows();
    std::vector<bool> active(m.cols(), true);
    std::vector<std::size_t> pivot_col(n);

    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t row = n - 1 - step;
        std::optional<std::size_t> pivot;
        for (;;) {
            pivot.reset();
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (!active[j] || ring_is_zero(m(row, j))) continue;
                if (!pivot || euclid_size(m(row, j)) < euclid_size(m(row, *pivot))) pivot = j;
            }
            if (!pivot) throw LinalgError("generators do not span a full-rank module");
            bool clean = true;
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (j == *pivot || !active[j] || ring_is_zero(m(row, j))) continue;
                R q = ring_quotient(m(row, j), m(row, *pivot));
                column_axpy(m, j, q, *pivot);
                if (!ring_is_zero(m(row, j))) clean = false;
            }
            if (clean) break;
        }
        if (ring_unit(m(row, *pivot)) < 0) negate_column(m, *pivot);
        active[*pivot] = false;
        pivot_col[row] = *pivot;
    }

    Matrix<R> h(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) h(i, j) = m(i, pivot_col[j]);

    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t k = j; k-- > 0;) {
            if (ring_is_zero(h(k, j))) continue;
            R q = ring_quotient(h(k, j), h(k, k));
            if (!ring_is_zero(q)) column_axpy(h, j, q, k);
        }
    return h;
}

}  // namespace

Matrix<QuadInt> hnf_znu_integral(Matrix<QuadInt> generators) { return column_hnf(std::move(generators)); }
Matrix<Int> hnf_z_integral(Matrix<Int> generators) { return column_hnf(std::move(generators)); }

Matrix<QuadRat> hnf_znu(const Matrix<QuadRat>& generators, const QuadInt& denominator)
{
    if (denominator.is_zero()) throw LinalgError("zero denominator bound");
    const QuadRat d(denominator);
    Matrix<QuadInt> scaled(generators.rows(), generators.cols());
    for (std::size_t i = 0; i < generators.rows(); ++i)
        for (std::size_t j = 0; j < generators.cols(); ++j) {
            QuadRat s = generators(i, j) * d;
            if (!s.is_integral()) throw LinalgError("generator lies outside (1/d) Z[nu]^n");
            scaled(i, j) = s.to_quad_int();
        }
    const QuadRat inv = d.inverse();
    return column_hnf(std::move(scaled)).map([&](const QuadInt& x) { return QuadRat(x) * inv; });
}

Matrix<Rat> hnf_z(const Matrix<Rat>& generators)
{
    Int den = 1;
    for (std::size_t i = 0; i < generators.rows(); ++i)
        for (std::size_t j = 0; j < generators.cols(); ++j) den = lcm(den, generators(i, j).get_den());
    Matrix<Int> scaled = generators.map([&](const Rat& x) {
        Rat s = x * den;
        return Int(s);
    });
    const Rat inv = make_rat(1, den);
    return column_hnf(std::move(scaled)).map([&](const Int& x) { return Rat(x * inv); });
}

std::vector<QuadRat> lattice_coordinates(const Matrix<QuadRat>& basis, const std::vector<QuadRat>& v)
{
    Matrix<QuadRat> rhs(v.size(), 1);
    rhs.set_column(0, v);
    return solve(basis, rhs).column(0);
}

bool znu_contains(const Matrix<QuadRat>& basis, const std::vector<QuadRat>& v)
{
    for (const auto& c : lattice_coordinates(basis, v))
        if (!c.is_integral()) return false;
    return true;
}

}  // namespace klein
