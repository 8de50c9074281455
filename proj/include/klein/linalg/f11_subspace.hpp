#pragma once

#include "klein/linalg/f11.hpp"
#include "klein/linalg/matrix.hpp"

#include <vector>

namespace klein {

/// Subspace of F_11^n held as a reduced row-echelon basis (one row per
/// basis vector).
class F11Subspace {
public:
    /// Row span of `spanning_rows`.
    static F11Subspace span(std::size_t ambient_dim, Matrix<F11> spanning_rows);
    static F11Subspace zero(std::size_t ambient_dim);

    std::size_t dimension() const { return basis_.rows(); }
    std::size_t ambient_dimension() const { return ambient_; }
    const Matrix<F11>& basis() const { return basis_; }

    bool contains(const std::vector<F11>& v) const;
    bool contains(const F11Subspace& other) const;
    /// m W is a subset of W, with m acting on column vectors.
    bool is_invariant_under(const Matrix<F11>& m) const;

    friend bool operator==(const F11Subspace& a, const F11Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    Matrix<F11> basis_;
};

/// The chain W_j = ker (m - I)^j, j = 0..n, of a unipotent m with a single
/// Jordan block.  Those are then all the m-invariant subspaces.  Throws
/// LinalgError("not a single unipotent Jordan block") otherwise.
std::vector<F11Subspace> invariant_chain_f11(const Matrix<F11>& m);

/// Every m-invariant subspace of F_11^n, by enumerating all reduced
/// row-echelon bases.  Exponential in n; meant for n <= 4.
std::vector<F11Subspace> all_invariant_subspaces(const Matrix<F11>& m);

}  // namespace klein
