#pragma once

// The tangent space H^0(Omega_S)^* of the Albanese variety, in the basis
// e_1..e_5 dual to the coordinates x_1..x_5 of P^4, together with the
// analytic representations of the order-5 and order-11 automorphisms.
//
//   v_k = xi^k e_1 + xi^{9k} e_2 + xi^{3k} e_3 + xi^{4k} e_4 + xi^{5k} e_5
//
// Both v_k and l_k use the weights 1, 9, 3, 4, 5.  These are the quadratic
// residues mod 11, which is why the Gauss period nu = xi + xi^9 + xi^3 +
// xi^4 + xi^5 keeps appearing.

#include "klein/arith/cyclotomic.hpp"
#include "klein/linalg/matrix.hpp"

#include <array>
#include <string>
#include <vector>

namespace klein {

inline constexpr std::array<int, 5> kKleinWeights{1, 9, 3, 4, 5};

/// Tangent vector, coordinates in e_1..e_5.
struct PeriodVector {
    std::array<CycElem, 5> e{};

    PeriodVector& operator+=(const PeriodVector& o);
    PeriodVector& operator-=(const PeriodVector& o);
    friend PeriodVector operator+(PeriodVector a, const PeriodVector& b) { return a += b; }
    friend PeriodVector operator-(PeriodVector a, const PeriodVector& b) { return a -= b; }
    friend PeriodVector operator*(const CycElem& s, PeriodVector v);
    friend bool operator==(const PeriodVector& a, const PeriodVector& b) { return a.e == b.e; }
    bool is_zero() const;
};

/// Linear form on the tangent space, coordinates in x_1..x_5.
struct Functional {
    std::array<CycElem, 5> x{};

    CycElem operator()(const PeriodVector& v) const;
    Functional& operator+=(const Functional& o);
    friend Functional operator+(Functional a, const Functional& b) { return a += b; }
    friend Functional operator*(const CycElem& s, Functional f);
    friend bool operator==(const Functional& a, const Functional& b) { return a.x == b.x; }
    bool is_zero() const;
};

PeriodVector v_vector(long k);
/// l_k = xi^k x_1 + xi^{9k} x_2 + xi^{3k} x_3 + xi^{4k} x_4 + xi^{5k} x_5.
Functional ell_functional(long k);
/// The coordinate form x_i, i in 1..5.
Functional coordinate_functional(int i);

enum class AutoName { sigma, tau };

/// Analytic representation acting on e-coordinates (column vectors).
struct AutoMatrix {
    AutoName name;
    Matrix<CycElem> m;
};

/// (z1..z5) -> (z5, z1, z4, z2, z3); the root of unity in front is 1.
AutoMatrix sigma_matrix();
/// diag(xi, xi^9, xi^3, xi^4, xi^5); the extra power of xi is 0.
AutoMatrix tau_matrix();

PeriodVector apply_auto(const AutoMatrix& m, const PeriodVector& w);

/// Coordinates in the basis v_0..v_4.  Throws ArithmeticError("outside
/// Q(nu)-span") when some coordinate is not in Q(nu).
std::vector<QuadRat> to_v_coords(const PeriodVector& w);
PeriodVector from_v_coords(const std::vector<QuadRat>& c);

/// Entrywise complex conjugate.
Matrix<CycElem> conj(const Matrix<CycElem>& m);

}  // namespace klein
