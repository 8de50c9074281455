#include "klein/linalg/f11_subspace.hpp"

namespace klein {

F11Subspace F11Subspace::span(std::size_t ambient_dim, Matrix<F11> spanning_rows)
{
    F11Subspace s;
    s.ambient_ = ambient_dim;
    if (spanning_rows.rows() == 0) {
        s.basis_ = Matrix<F11>(0, ambient_dim);
        return s;
    }
    if (spanning_rows.cols() != ambient_dim) throw LinalgError("subspace rows have the wrong length");
    std::size_t r = rref(spanning_rows).size();
    s.basis_ = Matrix<F11>(r, ambient_dim);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) s.basis_(i, j) = spanning_rows(i, j);
    return s;
}

F11Subspace F11Subspace::zero(std::size_t ambient_dim) { return span(ambient_dim, Matrix<F11>(0, ambient_dim)); }

bool F11Subspace::contains(const std::vector<F11>& v) const
{
    Matrix<F11> rows(dimension() + 1, ambient_);
    for (std::size_t i = 0; i < dimension(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) rows(i, j) = basis_(i, j);
    for (std::size_t j = 0; j < ambient_; ++j) rows(dimension(), j) = v[j];
    return rank(rows) == dimension();
}

bool F11Subspace::contains(const F11Subspace& other) const
{
    for (std::size_t i = 0; i < other.dimension(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

bool F11Subspace::is_invariant_under(const Matrix<F11>& m) const
{
    for (std::size_t i = 0; i < dimension(); ++i) {
        Matrix<F11> col(ambient_, 1);
        col.set_column(0, basis_.row(i));
        if (!contains((m * col).column(0))) return false;
    }
    return true;
}

std::vector<F11Subspace> invariant_chain_f11(const Matrix<F11>& m)
{
    if (!m.is_square()) throw LinalgError("invariant chain needs a square matrix");
    const std::size_t n = m.rows();
    const Matrix<F11> nil = m - Matrix<F11>::identity(n);
    if (n == 0 || !power(nil, static_cast<unsigned>(n)).is_zero() ||
        power(nil, static_cast<unsigned>(n - 1)).is_zero())
        throw LinalgError("not a single unipotent Jordan block");

    std::vector<F11Subspace> chain;
    for (std::size_t j = 0; j <= n; ++j) {
        Matrix<F11> kernel = null_space(power(nil, static_cast<unsigned>(j)));
        chain.push_back(F11Subspace::span(n, kernel.transpose()));
    }
    return chain;
}

std::vector<F11Subspace> all_invariant_subspaces(const Matrix<F11>& m)
{
    if (!m.is_square()) throw LinalgError("invariant subspaces need a square matrix");
    const std::size_t n = m.rows();
    if (n > 6) throw LinalgError("subspace enumeration is limited to n <= 6");
    std::vector<F11Subspace> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> pivots;
        for (std::size_t c = 0; c < n; ++c)
            if (mask & (1u << c)) pivots.push_back(c);
        // free slots: right of the row's pivot, outside pivot columns
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            for (std::size_t c = pivots[r] + 1; c < n; ++c)
                if (!(mask & (1u << c))) slots.emplace_back(r, c);
        std::vector<int> digits(slots.size(), 0);
        while (true) {
            Matrix<F11> rows(pivots.size(), n);
            for (std::size_t r = 0; r < pivots.size(); ++r) rows(r, pivots[r]) = 1;
            for (std::size_t s = 0; s < slots.size(); ++s) rows(slots[s].first, slots[s].second) = digits[s];
            F11Subspace w = F11Subspace::span(n, rows);
            if (w.is_invariant_under(m)) out.push_back(std::move(w));
            std::size_t k = 0;
            while (k < digits.size() && ++digits[k] == F11::kP) digits[k++] = 0;
            if (k == digits.size()) break;
        }
    }
    return out;
}

}  // namespace klein
