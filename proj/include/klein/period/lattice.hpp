#pragma once

// Z[nu]-lattices in the tangent space, in v-coordinates, and the chain
//
//   Lambda_0 = Z[nu]^5  subset  Lambda_1  subset ... subset  Lambda_4
//
// cut out by the M_tau-stable subspaces of Lambda_4 / Lambda_0 = F_11^4.
// Every lattice here satisfies (1+2nu) Lambda_4 in Lambda_0, so all HNFs use the
// denominator bound 1+2nu and compare with ==.

#include "klein/arith/quadratic.hpp"
#include "klein/linalg/f11.hpp"
#include "klein/linalg/f11_subspace.hpp"
#include "klein/linalg/matrix.hpp"
#include "klein/period/vectors.hpp"

#include <array>
#include <string>
#include <vector>

namespace klein {

/// Rank-5 Z[nu]-module with its canonical HNF basis (columns, v-coordinates).
class ZnuLattice {
public:
    ZnuLattice() = default;
    /// HNF of the Z[nu]-span of the generator columns.
    static ZnuLattice from_generators(const Matrix<QuadRat>& generators, std::string label);

    const Matrix<QuadRat>& basis() const { return basis_; }
    const std::string& label() const { return label_; }
    std::vector<QuadRat> basis_vector(std::size_t j) const { return basis_.column(j); }

    bool contains(const std::vector<QuadRat>& v) const;
    bool contains(const ZnuLattice& sub) const;
    /// Product of the HNF pivots.
    QuadRat determinant() const;

    /// Same module; labels are ignored.
    friend bool operator==(const ZnuLattice& a, const ZnuLattice& b) { return a.basis_ == b.basis_; }
    friend bool operator!=(const ZnuLattice& a, const ZnuLattice& b) { return !(a == b); }

private:
    Matrix<QuadRat> basis_;
    std::string label_;
};

/// Z-index [outer : inner] = N(det inner / det outer).
Int lattice_index(const ZnuLattice& outer, const ZnuLattice& inner);

/// Rows l_0..l_4, columns e_1..e_5: A(k, j) = xi^{k w_j}.
Matrix<CycElem> klein_a_matrix();
/// The 5x5 matrix listing the v-coordinates of the dual vectors l*_k, as printed.
Matrix<QuadRat> printed_dual_matrix();
/// The matrix B in SL_5(Z[nu]), as printed.
Matrix<QuadRat> printed_b_matrix();
/// Column k holds the v-coordinates of l*_k, the dual basis of l_0..l_4,
/// computed from the inverse of A.
Matrix<QuadRat> dual_vectors_v();

/// Columns (v_0 - v_1)/(1+2nu), ..., (v_3 - v_4)/(1+2nu), v_0.
Matrix<QuadRat> r1_generators();

ZnuLattice r0_lattice();
ZnuLattice r1_lattice();
ZnuLattice r2_lattice();

/// Z[nu]-HNF of the generators v_0..v_10.
ZnuLattice build_lambda0();
/// Z-module spanned by v_0..v_10 equals the Z-module with basis v_k, nu v_k
/// (k = 0..4): the Z-span is already a Z[nu]-module.
bool lambda0_z_span_equals_r0();
/// Z[nu]-span of the dual vectors l*_1..l*_5.
ZnuLattice build_lambda4();

/// Matrix of M_tau acting on v-coordinates.
Matrix<QuadRat> tau_in_v();
ZnuLattice transform(const Matrix<QuadRat>& action, const ZnuLattice& lattice);
bool stabilized_by_tau(const ZnuLattice& lattice);

/// Lambda_4 / Lambda_0 with basis t_k = class of (v_{k-1} - v_k)/(1+2nu).
struct QuotientModel {
    /// 5x4, column k-1 the v-coordinates of the lift of t_k.
    Matrix<QuadRat> t_lifts;
    Matrix<F11> mhat_t;
    /// Columns w_1..w_4 in t-coordinates.
    Matrix<F11> w_in_t;
    Matrix<F11> mhat_w;

    /// phi: Lambda_4 -> F_11^4 in t-coordinates.  Throws unless z in Lambda_4.
    std::array<F11, 4> phi(const std::vector<QuadRat>& z) const;
    /// Lift of a t-coordinate vector (residues taken in 0..10).
    std::vector<QuadRat> lift(const std::vector<F11>& t) const;
};

QuotientModel build_quotient();
/// phi kills Z[nu] v_0..v_4 and commutes with M_tau on a Z-basis of Lambda_4.
bool quotient_is_consistent(const QuotientModel& q, const ZnuLattice& lambda4);

/// The printed matrices of the induced action.
Matrix<F11> printed_mhat_t();
Matrix<F11> printed_mhat_w();

struct LatticeChain {
    std::vector<F11Subspace> subspaces;  // W_0..W_4, t-coordinates
    std::array<ZnuLattice, 5> lattices;  // Lambda_j = phi^{-1}(W_j)
};

LatticeChain lattice_chain(const QuotientModel& q);

}  // namespace klein
