#include "klein/period/lattice.hpp"

#include "klein/arith/scalar_text.hpp"
#include "klein/linalg/hnf.hpp"

namespace klein {

namespace {

const QuadInt kDenominator = one_plus_two_nu();

Matrix<QuadRat> scalar_matrix(std::initializer_list<std::initializer_list<const char*>> rows)
{
    Matrix<QuadRat> m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const char* s : row) m(i, j++) = parse_scalar(s);
        ++i;
    }
    return m;
}

std::vector<QuadRat> unit_vector(std::size_t k)
{
    std::vector<QuadRat> v(5);
    v[k] = 1;
    return v;
}

Matrix<QuadRat> columns_to_matrix(const std::vector<std::vector<QuadRat>>& cols)
{
    Matrix<QuadRat> m(5, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

std::vector<QuadRat> scale(const QuadRat& s, std::vector<QuadRat> v)
{
    for (auto& c : v) c = s * c;
    return v;
}

std::vector<QuadRat> combine(std::initializer_list<std::pair<long, std::size_t>> terms, const QuadRat& s)
{
    std::vector<QuadRat> v(5);
    for (auto [coef, k] : terms) v[k] += QuadRat(coef);
    return scale(s, v);
}

// Q-coordinates (a_0, b_0, ..., a_4, b_4) of a v-coordinate vector.
std::vector<Rat> rational_coords(const std::vector<QuadRat>& v)
{
    std::vector<Rat> out;
    for (const auto& c : v) {
        out.push_back(c.a());
        out.push_back(c.b());
    }
    return out;
}

Matrix<Rat> rational_columns(const std::vector<std::vector<QuadRat>>& cols)
{
    Matrix<Rat> m(10, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, rational_coords(cols[j]));
    return m;
}

std::vector<QuadRat> mat_vec(const Matrix<QuadRat>& m, const std::vector<QuadRat>& v)
{
    Matrix<QuadRat> col(v.size(), 1);
    col.set_column(0, v);
    return (m * col).column(0);
}

}  // namespace

ZnuLattice ZnuLattice::from_generators(const Matrix<QuadRat>& generators, std::string label)
{
    ZnuLattice l;
    l.basis_ = hnf_znu(generators, kDenominator);
    l.label_ = std::move(label);
    return l;
}

bool ZnuLattice::contains(const std::vector<QuadRat>& v) const { return znu_contains(basis_, v); }

bool ZnuLattice::contains(const ZnuLattice& sub) const
{
    for (std::size_t j = 0; j < 5; ++j)
        if (!contains(sub.basis_vector(j))) return false;
    return true;
}

QuadRat ZnuLattice::determinant() const
{
    QuadRat d(1);
    for (std::size_t i = 0; i < basis_.rows(); ++i) d *= basis_(i, i);
    return d;
}

Int lattice_index(const ZnuLattice& outer, const ZnuLattice& inner)
{
    Rat n = (inner.determinant() / outer.determinant()).norm();
    if (!is_integer(n)) throw LinalgError("lattice_index: not a sublattice");
    return n.get_num();
}

Matrix<CycElem> klein_a_matrix()
{
    Matrix<CycElem> a(5, 5);
    for (int k = 0; k < 5; ++k)
        for (int j = 0; j < 5; ++j) a(k, j) = CycElem::zeta(static_cast<long>(k) * kKleinWeights[j]);
    return a;
}

Matrix<QuadRat> printed_dual_matrix()
{
    Matrix<QuadRat> m = scalar_matrix({
        {"-1", "-nu", "0", "-1", "1-nu"},
        {"-nu", "2", "0", "-nu", "3+nu"},
        {"0", "0", "0", "1", "-1"},
        {"-1", "-nu", "1", "-2", "1-nu"},
        {"1-nu", "3+nu", "-1", "1-nu", "2+2*nu"},
    });
    return QuadRat(kDenominator).inverse() * m;
}

Matrix<QuadRat> printed_b_matrix()
{
    return scalar_matrix({
        {"-nu-1", "1", "-1", "0", "5"},
        {"1", "-1", "0", "0", "nu"},
        {"-1", "0", "0", "1", "-1-nu"},
        {"0", "0", "1", "0", "nu"},
        {"0", "1", "0", "0", "nu"},
    });
}

Matrix<QuadRat> dual_vectors_v()
{
    Matrix<CycElem> inv = inverse(klein_a_matrix());
    Matrix<QuadRat> out(5, 5);
    for (std::size_t k = 0; k < 5; ++k) {
        PeriodVector dual;
        for (std::size_t i = 0; i < 5; ++i) dual.e[i] = inv(i, k);
        out.set_column(k, to_v_coords(dual));
    }
    return out;
}

Matrix<QuadRat> r1_generators()
{
    const QuadRat s = QuadRat(kDenominator).inverse();
    return columns_to_matrix({
        combine({{1, 0}, {-1, 1}}, s),
        combine({{1, 1}, {-1, 2}}, s),
        combine({{1, 2}, {-1, 3}}, s),
        combine({{1, 3}, {-1, 4}}, s),
        unit_vector(0),
    });
}

ZnuLattice r0_lattice() { return ZnuLattice::from_generators(Matrix<QuadRat>::identity(5), "R_0"); }

ZnuLattice r1_lattice() { return ZnuLattice::from_generators(r1_generators(), "R_1"); }

ZnuLattice r2_lattice()
{
    const QuadRat s = QuadRat(kDenominator).inverse();
    return ZnuLattice::from_generators(columns_to_matrix({
                                           combine({{1, 0}, {-3, 1}, {3, 2}, {-1, 3}}, s),
                                           combine({{1, 1}, {-3, 2}, {3, 3}, {-1, 4}}, s),
                                           unit_vector(0),
                                           unit_vector(1),
                                           unit_vector(2),
                                       }),
                                       "R_2");
}

ZnuLattice build_lambda0()
{
    std::vector<std::vector<QuadRat>> gens;
    for (long k = 0; k < 11; ++k) gens.push_back(to_v_coords(v_vector(k)));
    return ZnuLattice::from_generators(columns_to_matrix(gens), "Lambda_0");
}

bool lambda0_z_span_equals_r0()
{
    std::vector<std::vector<QuadRat>> z_gens;
    for (long k = 0; k < 11; ++k) z_gens.push_back(to_v_coords(v_vector(k)));
    std::vector<std::vector<QuadRat>> r0_basis;
    for (std::size_t k = 0; k < 5; ++k) {
        r0_basis.push_back(unit_vector(k));
        r0_basis.push_back(scale(QuadRat::nu(), unit_vector(k)));
    }
    return hnf_z(rational_columns(z_gens)) == hnf_z(rational_columns(r0_basis));
}

ZnuLattice build_lambda4() { return ZnuLattice::from_generators(dual_vectors_v(), "Lambda_4"); }

Matrix<QuadRat> tau_in_v()
{
    static const Matrix<QuadRat> t = [] {
        const AutoMatrix tau = tau_matrix();
        Matrix<QuadRat> m(5, 5);
        for (long k = 0; k < 5; ++k)
            m.set_column(static_cast<std::size_t>(k), to_v_coords(apply_auto(tau, v_vector(k))));
        return m;
    }();
    return t;
}

ZnuLattice transform(const Matrix<QuadRat>& action, const ZnuLattice& lattice)
{
    return ZnuLattice::from_generators(action * lattice.basis(), lattice.label());
}

bool stabilized_by_tau(const ZnuLattice& lattice) { return transform(tau_in_v(), lattice) == lattice; }

std::array<F11, 4> QuotientModel::phi(const std::vector<QuadRat>& z) const
{
    Matrix<QuadRat> basis(5, 5);
    for (std::size_t k = 0; k < 4; ++k) basis.set_column(k, t_lifts.column(k));
    basis.set_column(4, unit_vector(0));
    auto c = lattice_coordinates(basis, z);
    std::array<F11, 4> out{};
    for (std::size_t k = 0; k < 5; ++k) {
        if (!c[k].is_integral()) throw LinalgError("phi: vector is not in Lambda_4");
        if (k < 4) out[k] = F11(reduce_mod_1p2nu(c[k].to_quad_int()));
    }
    return out;
}

std::vector<QuadRat> QuotientModel::lift(const std::vector<F11>& t) const
{
    std::vector<QuadRat> v(5);
    for (std::size_t k = 0; k < 4; ++k) {
        if (t[k].is_zero()) continue;
        const QuadRat c(t[k].value());
        for (std::size_t i = 0; i < 5; ++i) v[i] += c * t_lifts(i, k);
    }
    return v;
}

QuotientModel build_quotient()
{
    QuotientModel q;
    Matrix<QuadRat> r1 = r1_generators();
    q.t_lifts = Matrix<QuadRat>(5, 4);
    for (std::size_t k = 0; k < 4; ++k) q.t_lifts.set_column(k, r1.column(k));

    const Matrix<QuadRat> tau = tau_in_v();
    q.mhat_t = Matrix<F11>(4, 4);
    for (std::size_t k = 0; k < 4; ++k) {
        auto image = q.phi(mat_vec(tau, q.t_lifts.column(k)));
        for (std::size_t i = 0; i < 4; ++i) q.mhat_t(i, k) = image[i];
    }

    q.w_in_t = Matrix<F11>{
        {-1, 1, -1, 1},
        {3, -2, 1, 0},
        {-3, 1, 0, 0},
        {1, 0, 0, 0},
    };
    q.mhat_w = inverse(q.w_in_t) * q.mhat_t * q.w_in_t;
    return q;
}

bool quotient_is_consistent(const QuotientModel& q, const ZnuLattice& lambda4)
{
    for (std::size_t m = 0; m < 5; ++m) {
        for (const auto& g : {unit_vector(m), scale(QuadRat::nu(), unit_vector(m))}) {
            for (F11 c : q.phi(g))
                if (!c.is_zero()) return false;
        }
    }
    const Matrix<QuadRat> tau = tau_in_v();
    for (std::size_t j = 0; j < 5; ++j) {
        for (const auto& g : {lambda4.basis_vector(j), scale(QuadRat::nu(), lambda4.basis_vector(j))}) {
            auto before = q.phi(g);
            auto after = q.phi(mat_vec(tau, g));
            Matrix<F11> col(4, 1);
            for (std::size_t i = 0; i < 4; ++i) col(i, 0) = before[i];
            Matrix<F11> expect = q.mhat_t * col;
            for (std::size_t i = 0; i < 4; ++i)
                if (expect(i, 0) != after[i]) return false;
        }
    }
    return true;
}

Matrix<F11> printed_mhat_t()
{
    return Matrix<F11>{
        {0, 0, 0, -1},
        {1, 0, 0, 4},
        {0, 1, 0, 5},
        {0, 0, 1, 4},
    };
}

Matrix<F11> printed_mhat_w()
{
    return Matrix<F11>{
        {1, 1, 0, 0},
        {0, 1, 1, 0},
        {0, 0, 1, 1},
        {0, 0, 0, 1},
    };
}

LatticeChain lattice_chain(const QuotientModel& q)
{
    LatticeChain chain;
    chain.subspaces = invariant_chain_f11(q.mhat_t);
    for (std::size_t j = 0; j < 5; ++j) {
        const F11Subspace& w = chain.subspaces[j];
        Matrix<QuadRat> gens(5, 5 + w.dimension());
        for (std::size_t k = 0; k < 5; ++k) gens(k, k) = 1;
        for (std::size_t r = 0; r < w.dimension(); ++r) gens.set_column(5 + r, q.lift(w.basis().row(r)));
        chain.lattices[j] = ZnuLattice::from_generators(gens, "Lambda_" + std::to_string(j));
    }
    return chain;
}

}  // namespace klein
