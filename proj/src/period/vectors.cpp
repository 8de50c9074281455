#include "klein/period/vectors.hpp"

namespace klein {

PeriodVector& PeriodVector::operator+=(const PeriodVector& o)
{
    for (int k = 0; k < 5; ++k) e[k] += o.e[k];
    return *this;
}

PeriodVector& PeriodVector::operator-=(const PeriodVector& o)
{
    for (int k = 0; k < 5; ++k) e[k] -= o.e[k];
    return *this;
}

PeriodVector operator*(const CycElem& s, PeriodVector v)
{
    for (auto& c : v.e) c = s * c;
    return v;
}

bool PeriodVector::is_zero() const
{
    for (const auto& c : e)
        if (!c.is_zero()) return false;
    return true;
}

CycElem Functional::operator()(const PeriodVector& v) const
{
    CycElem r;
    for (int k = 0; k < 5; ++k) r += x[k] * v.e[k];
    return r;
}

Functional& Functional::operator+=(const Functional& o)
{
    for (int k = 0; k < 5; ++k) x[k] += o.x[k];
    return *this;
}

Functional operator*(const CycElem& s, Functional f)
{
    for (auto& c : f.x) c = s * c;
    return f;
}

bool Functional::is_zero() const
{
    for (const auto& c : x)
        if (!c.is_zero()) return false;
    return true;
}

PeriodVector v_vector(long k)
{
    PeriodVector v;
    for (int j = 0; j < 5; ++j) v.e[j] = CycElem::zeta(kKleinWeights[j] * k);
    return v;
}

Functional ell_functional(long k)
{
    Functional f;
    for (int j = 0; j < 5; ++j) f.x[j] = CycElem::zeta(kKleinWeights[j] * k);
    return f;
}

Functional coordinate_functional(int i)
{
    Functional f;
    f.x.at(i - 1) = CycElem(1);
    return f;
}

AutoMatrix sigma_matrix()
{
    // new z_i = old z_{src[i]}
    constexpr int src[5] = {4, 0, 3, 1, 2};
    Matrix<CycElem> m(5, 5);
    for (int i = 0; i < 5; ++i) m(i, src[i]) = CycElem(1);
    return {AutoName::sigma, std::move(m)};
}

AutoMatrix tau_matrix()
{
    Matrix<CycElem> m(5, 5);
    for (int i = 0; i < 5; ++i) m(i, i) = CycElem::zeta(kKleinWeights[i]);
    return {AutoName::tau, std::move(m)};
}

PeriodVector apply_auto(const AutoMatrix& m, const PeriodVector& w)
{
    PeriodVector r;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (!m.m(i, j).is_zero()) r.e[i] += m.m(i, j) * w.e[j];
    return r;
}

namespace {

const Matrix<CycElem>& v_basis_inverse()
{
    static const Matrix<CycElem> inv = [] {
        Matrix<CycElem> v(5, 5);
        for (int k = 0; k < 5; ++k) {
            PeriodVector vk = v_vector(k);
            for (int i = 0; i < 5; ++i) v(i, k) = vk.e[i];
        }
        return inverse(v);
    }();
    return inv;
}

}  // namespace

std::vector<QuadRat> to_v_coords(const PeriodVector& w)
{
    const auto& inv = v_basis_inverse();
    std::vector<QuadRat> out;
    out.reserve(5);
    for (int k = 0; k < 5; ++k) {
        CycElem c;
        for (int i = 0; i < 5; ++i) c += inv(k, i) * w.e[i];
        auto q = try_project(c);
        if (!q) throw ArithmeticError("outside Q(nu)-span");
        out.push_back(*q);
    }
    return out;
}

PeriodVector from_v_coords(const std::vector<QuadRat>& c)
{
    PeriodVector w;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) w += embed_nu(c[k]) * v_vector(static_cast<long>(k));
    return w;
}

Matrix<CycElem> conj(const Matrix<CycElem>& m)
{
    return m.map([](const CycElem& x) { return x.conj(); });
}

}  // namespace klein
