#pragma once

// Intersection numbers of fibre classes F_l on the Fano surface.  A fibration
// form l is a linear form on the tangent space with Z[nu]-integral periods,
// written as t_1 y_1 + ... + t_5 y_5 in the basis dual to
//
//   u_1 = (v_0 - 3v_1 + 3v_2 - v_3)/(1+2nu),  u_2 = (v_1 - 3v_2 + 3v_3 - v_4)/(1+2nu),
//   u_3 = v_0,  u_4 = v_1,  u_5 = v_2.
//
// With <l, l'> = sum_k l(e_k) conj(l'(e_k)) and ||l||^2 = <l, l>:
//
//   F_l F_l' = ||l||^2 ||l'||^2 - <l, l'><l', l>
//   g(F_l) = 1 + 3||l||^2,  C_s F_l = 2||l||^2,  K F_l = 6||l||^2.

#include "klein/arith/cyclotomic.hpp"
#include "klein/linalg/matrix.hpp"
#include "klein/period/vectors.hpp"

#include <array>
#include <string>
#include <vector>

namespace klein {

/// u_1..u_5 in e-coordinates, as the columns of a matrix.
Matrix<CycElem> u_basis_matrix();
/// Row i holds y_{i+1} in x-coordinates.  Computed once and checked against
/// y_i(u_j) = delta_ij; throws ArithmeticError if that check fails.
const Matrix<CycElem>& y_basis_matrix();
Functional y_functional(int i);  // i in 1..5

CycElem pair_scalar(const Functional& l1, const Functional& l2);
/// ||l||^2 as a rational; throws if it does not project to Q.
Rat norm_squared(const Functional& l);
/// The intersection formula on arbitrary forms (rational in general).
Rat intersection_formula(const Functional& l1, const Functional& l2);

class FibrationForm {
public:
    explicit FibrationForm(std::array<QuadInt, 5> y);

    const std::array<QuadInt, 5>& y_coords() const { return y_; }
    const Functional& x_coords() const { return x_; }
    bool is_zero() const;
    /// The coordinates generate Z[nu].
    bool is_primitive() const;
    Rat norm_squared() const { return norm2_; }

private:
    std::array<QuadInt, 5> y_;
    Functional x_;
    Rat norm2_;
};

/// Throws std::invalid_argument on a zero form and ArithmeticError if the
/// value is not an integer.
Int fiber_intersection(const FibrationForm& l1, const FibrationForm& l2);
Int genus(const FibrationForm& l);
Int incidence_degree(const FibrationForm& l);
Int canonical_degree(const FibrationForm& l);

/// y_k, then y_k + y_l (k < l), then y_k + nu y_l (k < l).
std::vector<FibrationForm> ns_basis();
std::vector<std::string> ns_basis_labels();

Matrix<Int> gram_25();
Int gram_25_det();

/// Coordinates over the 25 basis classes.
using NSClass = std::vector<Rat>;

Rat intersect(const NSClass& a, const NSClass& b);
/// Intersection of a class with F_l, via the basis intersections F_i F_l.
Rat intersect_with_fibre(const NSClass& a, const FibrationForm& l);

struct ThetaData {
    NSClass theta;        // pullback of c_1(Theta)
    NSClass incidence;    // C_s = theta / 2
    NSClass canonical;    // K = 3 theta / 2
    bool theta_integral = false;
    bool theta_has_odd_coordinate = false;
    Rat theta_square, incidence_square, canonical_square;
};

/// Solves Gram x = b with b_i = 4 ||l_i||^2.
ThetaData theta_class();

struct NSLattice {
    Matrix<Rat> basis;  // columns, coordinates over the 25 basis classes
    Int discriminant;
    Int index;  // over the lattice spanned by the 25 classes
    bool half_theta_was_new = false;
};

/// NS(S): the 25 classes together with theta / 2.
NSLattice ns_s_lattice();

struct NormalizedFibration {
    FibrationForm form;
    QuadRat factor;  // input = factor * form
    bool connected = false;
};

/// Primitive representative in P^4(Q(nu)); the first nonzero coordinate is
/// canonical-positive.  Throws std::invalid_argument on the zero vector.
NormalizedFibration normalize_fibration(const std::array<QuadRat, 5>& coords);

}  // namespace klein
