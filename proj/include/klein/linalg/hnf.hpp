#pragma once

// Column Hermite normal form over the Euclidean rings Z and Z[nu].
//
// Generators are the columns of the input.  The output is square and upper
// triangular (column j is supported on rows 0..j), every pivot is
// unit-normalized, and every entry above a pivot is the canonical remainder
// of division by that pivot.  These choices make the output a function of the
// module alone, so lattices can be compared with ==.

#include "klein/arith/quadratic.hpp"
#include "klein/linalg/matrix.hpp"

namespace klein {

/// H with Z[nu]-span(H) = Z[nu]-span(generators).  Every generator entry
/// times `denominator` must lie in Z[nu]; throws LinalgError if the
/// generators do not span a full-rank module.
Matrix<QuadRat> hnf_znu(const Matrix<QuadRat>& generators, const QuadInt& denominator);

/// Over Z, with the denominator taken from the entries.  Pivots positive,
/// entries above a pivot in [0, pivot).
Matrix<Rat> hnf_z(const Matrix<Rat>& generators);

/// Integral cores, exposed for testing.
Matrix<QuadInt> hnf_znu_integral(Matrix<QuadInt> generators);
Matrix<Int> hnf_z_integral(Matrix<Int> generators);

/// Coordinates c with basis * c = v, when the basis is square and
/// nonsingular; throws if v is outside the Q(nu)-span (cannot happen for
/// full rank).
std::vector<QuadRat> lattice_coordinates(const Matrix<QuadRat>& basis, const std::vector<QuadRat>& v);

/// v lies in the Z[nu]-module spanned by the columns of a square basis.
bool znu_contains(const Matrix<QuadRat>& basis, const std::vector<QuadRat>& v);

}  // namespace klein
