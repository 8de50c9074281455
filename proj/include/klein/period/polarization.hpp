#pragma once

// The alternating form E = Im H of the Hermitian form H = a (2/sqrt 11) I,
// written in Q(zeta): for tangent vectors z, w in e-coordinates
//
//   E(z, w) = a * sum_k (z_k conj(w_k) - conj(z_k) w_k) / (1 + 2nu)
//
// where 1 + 2nu = sqrt(-11).  Numerator and denominator are both purely
// imaginary, so E is real; on the Q(nu)-span of the v_k it is rational.

#include "klein/period/lattice.hpp"

#include <optional>
#include <vector>

namespace klein {

/// Throws ArithmeticError if the value does not project to Q.
Rat polarization_value(const PeriodVector& z, const PeriodVector& w, const Int& a);

/// Z-basis g_1, nu g_1, ..., g_5, nu g_5 of the lattice, in v-coordinates.
std::vector<std::vector<QuadRat>> z_basis(const ZnuLattice& lattice);

/// 10x10 matrix of E on z_basis(lattice).
Matrix<Rat> gram_alternating(const ZnuLattice& lattice, const Int& a);

/// det of gram_alternating, the square of the Pfaffian.
Rat pfaffian_squared(const ZnuLattice& lattice, const Int& a);

struct PfaffianRow {
    int j = 0;
    Rat at_a1;
    Rat at_a2;
    /// at_a2 == 2^10 * at_a1.
    bool homogeneous = false;
    /// The value is the square of a rational.
    bool is_square = false;
    /// The positive integer a with a^10 * at_a1 == 1, if any.
    std::optional<Int> unimodular_scale;
};

std::vector<PfaffianRow> pfaffian_table(const LatticeChain& chain);

/// The (j, a) pairs with Pfaffian 1 found by the table.
std::vector<std::pair<int, Int>> unimodular_pairs(const std::vector<PfaffianRow>& table);

struct HermitianReport {
    /// Dimensions over the real subfield Q(zeta + zeta^-1) of the space of
    /// Hermitian H with tM H conj(M) = H.
    std::size_t tau_dimension = 0;
    std::size_t group_dimension = 0;
    bool tau_solutions_diagonal = false;
    bool identity_invariant = false;
    bool sigma_unitary = false;
    bool tau_unitary = false;
};

/// Dimension over Q(zeta + zeta^-1) of the Hermitian solutions for all of
/// `ms`.  If `basis` is given it receives a Q-basis of the solutions.
std::size_t invariant_hermitian_dimension(const std::vector<Matrix<CycElem>>& ms,
                                          std::vector<Matrix<CycElem>>* basis = nullptr);

/// tM conj(M) == I.
bool is_unitary(const Matrix<CycElem>& m);

HermitianReport hermitian_invariance_check();

}  // namespace klein
