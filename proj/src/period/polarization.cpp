#include "klein/period/polarization.hpp"

#include <gmp.h>

namespace klein {

namespace {

// sqrt(-11) as an element of Q(zeta).
const CycElem& sqrt_minus_11()
{
    static const CycElem s = embed_nu(QuadRat(one_plus_two_nu()));
    return s;
}

std::optional<Int> exact_root(const Int& x, unsigned long n)
{
    if (x <= 0) return std::nullopt;
    Int r;
    if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), n) == 0) return std::nullopt;
    return r;
}

Matrix<CycElem> hermitian_matrix_from(const std::vector<Rat>& params)
{
    // Parameter layout: for each i < j ten power-basis coefficients of H(i,j),
    // then for each i five coefficients of H(i,i) in the basis
    // 1, zeta + zeta^-1, ..., zeta^4 + zeta^-4.
    Matrix<CycElem> h(5, 5);
    std::size_t p = 0;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            CycElem::Coeffs c;
            for (int k = 0; k < 10; ++k) c[k] = params[p++];
            h(i, j) = CycElem(c);
            h(j, i) = h(i, j).conj();
        }
    for (std::size_t i = 0; i < 5; ++i) {
        CycElem d(params[p++]);
        for (long k = 1; k <= 4; ++k) d += CycElem(params[p++]) * (CycElem::zeta(k) + CycElem::zeta(-k));
        h(i, i) = d;
    }
    return h;
}

constexpr std::size_t kHermitianParams = 10 * 10 + 5 * 5;

}  // namespace

Rat polarization_value(const PeriodVector& z, const PeriodVector& w, const Int& a)
{
    CycElem num;
    for (int k = 0; k < 5; ++k) num += z.e[k] * w.e[k].conj() - z.e[k].conj() * w.e[k];
    CycElem value = CycElem(Rat(a)) * num / sqrt_minus_11();
    auto r = value.to_rational();
    if (!r) throw ArithmeticError("polarization value is not rational");
    return *r;
}

std::vector<std::vector<QuadRat>> z_basis(const ZnuLattice& lattice)
{
    std::vector<std::vector<QuadRat>> out;
    for (std::size_t j = 0; j < 5; ++j) {
        auto g = lattice.basis_vector(j);
        out.push_back(g);
        for (auto& c : g) c = QuadRat::nu() * c;
        out.push_back(g);
    }
    return out;
}

Matrix<Rat> gram_alternating(const ZnuLattice& lattice, const Int& a)
{
    std::vector<PeriodVector> vs;
    for (const auto& c : z_basis(lattice)) vs.push_back(from_v_coords(c));
    Matrix<Rat> g(10, 10);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = i + 1; j < 10; ++j) {
            g(i, j) = polarization_value(vs[i], vs[j], a);
            g(j, i) = -g(i, j);
        }
    return g;
}

Rat pfaffian_squared(const ZnuLattice& lattice, const Int& a) { return det(gram_alternating(lattice, a)); }

std::vector<PfaffianRow> pfaffian_table(const LatticeChain& chain)
{
    std::vector<PfaffianRow> table;
    for (int j = 0; j < 5; ++j) {
        PfaffianRow row;
        row.j = j;
        row.at_a1 = pfaffian_squared(chain.lattices[j], 1);
        row.at_a2 = pfaffian_squared(chain.lattices[j], 2);
        row.homogeneous = row.at_a2 == Rat(ipow(Int(2), 10)) * row.at_a1;
        row.is_square = is_rational_square(row.at_a1, nullptr);
        // a^10 P_j(1) = 1 forces 1/P_j(1) to be an integer tenth power.
        Rat inv = 1 / row.at_a1;
        if (is_integer(inv)) row.unimodular_scale = exact_root(inv.get_num(), 10);
        table.push_back(row);
    }
    return table;
}

std::vector<std::pair<int, Int>> unimodular_pairs(const std::vector<PfaffianRow>& table)
{
    std::vector<std::pair<int, Int>> out;
    for (const auto& row : table)
        if (row.unimodular_scale) out.emplace_back(row.j, *row.unimodular_scale);
    return out;
}

std::size_t invariant_hermitian_dimension(const std::vector<Matrix<CycElem>>& ms,
                                          std::vector<Matrix<CycElem>>* basis)
{
    // Each parameter contributes one column: the Q-coordinates of all entries
    // of tM H conj(M) - H for every M.
    const std::size_t rows_per_m = 25 * CycElem::kDegree;
    Matrix<Rat> system(rows_per_m * ms.size(), kHermitianParams);
    std::vector<Matrix<CycElem>> conj_ms, trans_ms;
    for (const auto& m : ms) {
        conj_ms.push_back(conj(m));
        trans_ms.push_back(m.transpose());
    }
    for (std::size_t p = 0; p < kHermitianParams; ++p) {
        std::vector<Rat> params(kHermitianParams);
        params[p] = 1;
        Matrix<CycElem> h = hermitian_matrix_from(params);
        for (std::size_t t = 0; t < ms.size(); ++t) {
            Matrix<CycElem> diff = trans_ms[t] * h * conj_ms[t] - h;
            std::size_t r = t * rows_per_m;
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = 0; j < 5; ++j)
                    for (int k = 0; k < CycElem::kDegree; ++k) system(r++, p) = diff(i, j).coeff(k);
        }
    }
    Matrix<Rat> kernel = null_space(system);
    if (basis) {
        basis->clear();
        for (std::size_t c = 0; c < kernel.cols(); ++c) basis->push_back(hermitian_matrix_from(kernel.column(c)));
    }
    if (kernel.cols() % 5 != 0) throw LinalgError("solution space is not a module over the real subfield");
    return kernel.cols() / 5;
}

bool is_unitary(const Matrix<CycElem>& m)
{
    return m.transpose() * conj(m) == Matrix<CycElem>::identity(m.rows());
}

HermitianReport hermitian_invariance_check()
{
    const Matrix<CycElem> tau = tau_matrix().m;
    const Matrix<CycElem> sigma = sigma_matrix().m;
    HermitianReport r;

    std::vector<Matrix<CycElem>> tau_basis;
    r.tau_dimension = invariant_hermitian_dimension({tau}, &tau_basis);
    r.tau_solutions_diagonal = true;
    for (const auto& h : tau_basis)
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                if (i != j && !h(i, j).is_zero()) r.tau_solutions_diagonal = false;

    r.group_dimension = invariant_hermitian_dimension({tau, sigma});

    const auto id = Matrix<CycElem>::identity(5);
    r.identity_invariant = tau.transpose() * id * conj(tau) == id && sigma.transpose() * id * conj(sigma) == id;
    r.sigma_unitary = is_unitary(sigma);
    r.tau_unitary = is_unitary(tau);
    return r;
}

}  // namespace klein
