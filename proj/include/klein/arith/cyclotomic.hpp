#pragma once

// Exact arithmetic in Q(zeta), zeta a primitive 11th root of unity.
//
// Elements are stored in the power basis 1, zeta, ..., zeta^9.  Products and
// Galois images are folded modulo zeta^11 = 1 and then reduced with
// zeta^10 = -(1 + zeta + ... + zeta^9), which gives a unique representative.

#include "klein/arith/quadratic.hpp"

#include <array>
#include <optional>
#include <ostream>

namespace klein {

class CycElem {
public:
    static constexpr int kDegree = 10;
    static constexpr int kOrder = 11;
    using Coeffs = std::array<Rat, kDegree>;

    CycElem() = default;
    CycElem(long c) { coeffs_[0] = c; }
    CycElem(const Rat& c) { coeffs_[0] = c; }
    explicit CycElem(Coeffs coeffs) : coeffs_(std::move(coeffs)) {}

    /// zeta^k for any integer k.
    static CycElem zeta(long k);

    const Coeffs& coeffs() const { return coeffs_; }
    const Rat& coeff(int i) const { return coeffs_[i]; }

    bool is_zero() const;
    std::optional<Rat> to_rational() const;

    /// Field automorphism zeta -> zeta^a, a coprime to 11.
    CycElem galois(long a) const;
    /// Complex conjugation, zeta -> zeta^10.
    CycElem conj() const { return galois(10); }

    /// Field norm down to Q.
    Rat norm() const;
    CycElem inverse() const;

    CycElem operator-() const;
    CycElem& operator+=(const CycElem& o);
    CycElem& operator-=(const CycElem& o);
    CycElem& operator*=(const CycElem& o);
    CycElem& operator/=(const CycElem& o) { return *this *= o.inverse(); }

    friend CycElem operator+(CycElem x, const CycElem& y) { return x += y; }
    friend CycElem operator-(CycElem x, const CycElem& y) { return x -= y; }
    friend CycElem operator*(const CycElem& x, const CycElem& y);
    friend CycElem operator/(CycElem x, const CycElem& y) { return x /= y; }
    friend bool operator==(const CycElem& x, const CycElem& y) { return x.coeffs_ == y.coeffs_; }
    friend bool operator!=(const CycElem& x, const CycElem& y) { return !(x == y); }

private:
    Coeffs coeffs_{};
};

/// Ring embedding Q(nu) -> Q(zeta), nu -> zeta + zeta^3 + zeta^4 + zeta^5 + zeta^9.
CycElem embed_nu(const QuadRat& q);

/// Inverse of embed_nu on its image; nullopt outside Q(nu).
std::optional<QuadRat> try_project(const CycElem& x);

/// Like try_project but throws ArithmeticError outside Q(nu).
QuadRat project_nu(const CycElem& x);

CycElem divexact(const CycElem& a, const CycElem& b);

std::ostream& operator<<(std::ostream& os, const CycElem& x);

}  // namespace klein
