#pragma once

// Dense row-major matrices over an exact scalar domain, with the small set
// of algorithms this project needs: fraction-free determinant, Gauss-Jordan
// solve/inverse/rank over fields.  Sizes never exceed a few hundred entries
// per side, so nothing here is blocked or sparse.

#include "klein/arith/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace klein {

class LinalgError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw LinalgError("ragged matrix initializer");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    void set_column(std::size_t j, const std::vector<T>& c)
    {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    template <class F>
    auto map(F&& f) const
    {
        using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
        Matrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw LinalgError("matrix product dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        a.check_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        a.check_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend Matrix operator*(const T& s, Matrix m)
    {
        for (auto& v : m.data_) v = s * v;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const
    {
        for (const auto& v : data_)
            if (!(v == T(0))) return false;
        return true;
    }

    void swap_rows(std::size_t i, std::size_t k)
    {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }

private:
    void check_same_shape(const Matrix& b) const
    {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw LinalgError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> power(const Matrix<T>& m, unsigned k)
{
    Matrix<T> r = Matrix<T>::identity(m.rows());
    for (unsigned i = 0; i < k; ++i) r = r * m;
    return r;
}

/// Smallest k >= 1 with m^k = I, or 0 if none up to `limit`.
template <class T>
unsigned multiplicative_order(const Matrix<T>& m, unsigned limit)
{
    const Matrix<T> id = Matrix<T>::identity(m.rows());
    Matrix<T> p = m;
    for (unsigned k = 1; k <= limit; ++k) {
        if (p == id) return k;
        p = p * m;
    }
    return 0;
}

/// Determinant by Bareiss fraction-free elimination.  Works over any
/// integral domain whose `divexact(a, b)` returns the exact quotient; over
/// Z and Z[nu] every intermediate stays in the ring.
template <class T>
T det(Matrix<T> m)
{
    if (!m.is_square()) throw LinalgError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    bool negate = false;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T(0)) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == T(0)) ++p;
            if (p == n) return T(0);
            m.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = divexact(num, prev);
            }
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return negate ? T(0) - d : d;
}

/// Reduced row echelon form over a field, in place; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == T(0)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == T(0)) continue;
            T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!(m(r, j) == T(0))) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m)
{
    return rref(m).size();
}

/// Basis of the right null space {x : m x = 0}, as columns.
template <class T>
Matrix<T> null_space(Matrix<T> m)
{
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix<T> basis(m.cols(), m.cols() - pivots.size());
    std::size_t k = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(free, k) = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = T(0) - m(r, free);
        ++k;
    }
    return basis;
}

/// Solves m x = rhs exactly over a field; throws on a singular m.
template <class T>
Matrix<T> solve(const Matrix<T>& m, const Matrix<T>& rhs)
{
    if (!m.is_square()) throw LinalgError("solve needs a square matrix");
    if (rhs.rows() != m.rows()) throw LinalgError("solve right-hand side has the wrong height");
    const std::size_t n = m.rows();
    Matrix<T> aug(n, n + rhs.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        for (std::size_t j = 0; j < rhs.cols(); ++j) aug(i, n + j) = rhs(i, j);
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw LinalgError("singular matrix");
    Matrix<T> x(n, rhs.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j) x(i, j) = aug(i, n + j);
    return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m)
{
    return solve(m, Matrix<T>::identity(m.rows()));
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "\n[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
        os << ']';
    }
    return os;
}

}  // namespace klein
