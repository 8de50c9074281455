#include "klein/arith/cyclotomic.hpp"

namespace klein {

namespace {

constexpr int kResidues[5] = {1, 3, 4, 5, 9};
constexpr int kNonResidues[5] = {2, 6, 7, 8, 10};

long mod11(long k)
{
    long r = k % 11;
    return r < 0 ? r + 11 : r;
}

CycElem::Coeffs fold(std::array<Rat, 11>& acc)
{
    CycElem::Coeffs out;
    for (int i = 0; i < CycElem::kDegree; ++i) out[i] = acc[i] - acc[10];
    return out;
}

}  // namespace

CycElem CycElem::zeta(long k)
{
    std::array<Rat, 11> acc{};
    acc[mod11(k)] = 1;
    return CycElem(fold(acc));
}

bool CycElem::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::optional<Rat> CycElem::to_rational() const
{
    for (int i = 1; i < kDegree; ++i)
        if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_[0];
}

CycElem CycElem::galois(long a) const
{
    long m = mod11(a);
    if (m == 0) throw ArithmeticError("galois exponent must be coprime to 11");
    std::array<Rat, 11> acc{};
    for (int i = 0; i < kDegree; ++i)
        if (coeffs_[i] != 0) acc[mod11(m * i)] += coeffs_[i];
    return CycElem(fold(acc));
}

Rat CycElem::norm() const
{
    CycElem p = *this;
    for (long a = 2; a < kOrder; ++a) p *= galois(a);
    auto r = p.to_rational();
    if (!r) throw ArithmeticError("norm is not rational");
    return *r;
}

CycElem CycElem::inverse() const
{
    if (is_zero()) throw ArithmeticError("division by zero in Q(zeta)");
    CycElem others(1);
    for (long a = 2; a < kOrder; ++a) others *= galois(a);
    auto n = (*this * others).to_rational();
    if (!n || *n == 0) throw ArithmeticError("norm is not a nonzero rational");
    Rat inv_n = 1 / *n;
    for (auto& c : others.coeffs_) c *= inv_n;
    return others;
}

CycElem CycElem::operator-() const
{
    CycElem r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycElem& CycElem::operator+=(const CycElem& o)
{
    for (int i = 0; i < kDegree; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycElem& CycElem::operator-=(const CycElem& o)
{
    for (int i = 0; i < kDegree; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycElem operator*(const CycElem& x, const CycElem& y)
{
    std::array<Rat, 11> acc{};
    for (int i = 0; i < CycElem::kDegree; ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (int j = 0; j < CycElem::kDegree; ++j) {
            if (y.coeffs_[j] == 0) continue;
            acc[(i + j) % 11] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    return CycElem(fold(acc));
}

CycElem& CycElem::operator*=(const CycElem& o)
{
    *this = *this * o;
    return *this;
}

CycElem embed_nu(const QuadRat& q)
{
    CycElem::Coeffs c{};
    c[0] = q.a();
    for (int r : kResidues) c[r] = q.b();
    return CycElem(std::move(c));
}

std::optional<QuadRat> try_project(const CycElem& x)
{
    const Rat& b = x.coeff(1);
    for (int r : kResidues)
        if (x.coeff(r) != b) return std::nullopt;
    for (int n : kNonResidues)
        if (n < CycElem::kDegree && x.coeff(n) != 0) return std::nullopt;
    return QuadRat(x.coeff(0), b);
}

QuadRat project_nu(const CycElem& x)
{
    auto q = try_project(x);
    if (!q) throw ArithmeticError("element of Q(zeta) lies outside Q(nu)");
    return *q;
}

CycElem divexact(const CycElem& a, const CycElem& b) { return a / b; }

std::ostream& operator<<(std::ostream& os, const CycElem& x)
{
    os << '[';
    for (int i = 0; i < CycElem::kDegree; ++i) {
        if (i) os << ',';
        os << x.coeff(i).get_str();
    }
    return os << ']';
}

}  // namespace klein
