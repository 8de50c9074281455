#include "klein/ns/neron_severi.hpp"

#include "klein/linalg/hnf.hpp"

#include <stdexcept>

namespace klein {

namespace {

PeriodVector from_v(std::initializer_list<long> c, bool over_1p2nu)
{
    std::vector<QuadRat> v;
    const QuadRat s = over_1p2nu ? QuadRat(one_plus_two_nu()).inverse() : QuadRat(1);
    for (long x : c) v.push_back(s * QuadRat(x));
    return from_v_coords(v);
}

Rat project_rational(const CycElem& x, const char* what)
{
    auto r = x.to_rational();
    if (!r) throw ArithmeticError(std::string(what) + " is not rational");
    return *r;
}

Int as_integer(const Rat& r, const char* what)
{
    if (!is_integer(r)) throw ArithmeticError(std::string(what) + " is not an integer: " + r.get_str());
    return r.get_num();
}

void require_nonzero(const FibrationForm& l)
{
    if (l.is_zero()) throw std::invalid_argument("zero fibration form");
}

}  // namespace

Matrix<CycElem> u_basis_matrix()
{
    const PeriodVector us[5] = {
        from_v({1, -3, 3, -1, 0}, true), from_v({0, 1, -3, 3, -1}, true), from_v({1, 0, 0, 0, 0}, false),
        from_v({0, 1, 0, 0, 0}, false),  from_v({0, 0, 1, 0, 0}, false),
    };
    Matrix<CycElem> u(5, 5);
    for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t i = 0; i < 5; ++i) u(i, j) = us[j].e[i];
    return u;
}

const Matrix<CycElem>& y_basis_matrix()
{
    static const Matrix<CycElem> y = [] {
        Matrix<CycElem> u = u_basis_matrix();
        Matrix<CycElem> inv = inverse(u);
        if (inv * u != Matrix<CycElem>::identity(5)) throw ArithmeticError("dual basis check failed");
        return inv;
    }();
    return y;
}

Functional y_functional(int i)
{
    const auto& y = y_basis_matrix();
    Functional f;
    for (std::size_t k = 0; k < 5; ++k) f.x[k] = y(static_cast<std::size_t>(i - 1), k);
    return f;
}

CycElem pair_scalar(const Functional& l1, const Functional& l2)
{
    CycElem s;
    for (int k = 0; k < 5; ++k) s += l1.x[k] * l2.x[k].conj();
    return s;
}

Rat norm_squared(const Functional& l) { return project_rational(pair_scalar(l, l), "norm"); }

Rat intersection_formula(const Functional& l1, const Functional& l2)
{
    const CycElem cross = pair_scalar(l1, l2) * pair_scalar(l2, l1);
    return norm_squared(l1) * norm_squared(l2) - project_rational(cross, "cross term");
}

FibrationForm::FibrationForm(std::array<QuadInt, 5> y) : y_(std::move(y))
{
    for (int i = 0; i < 5; ++i)
        if (!y_[i].is_zero()) x_ += embed_nu(QuadRat(y_[i])) * y_functional(i + 1);
    norm2_ = klein::norm_squared(x_);
}

bool FibrationForm::is_zero() const
{
    for (const auto& c : y_)
        if (!c.is_zero()) return false;
    return true;
}

bool FibrationForm::is_primitive() const
{
    if (is_zero()) return false;
    QuadInt g;
    for (const auto& c : y_)
        if (!c.is_zero()) g = g.is_zero() ? c : quad_gcd(g, c);
    return g.is_unit();
}

Int fiber_intersection(const FibrationForm& l1, const FibrationForm& l2)
{
    require_nonzero(l1);
    require_nonzero(l2);
    return as_integer(intersection_formula(l1.x_coords(), l2.x_coords()), "intersection number");
}

Int genus(const FibrationForm& l)
{
    require_nonzero(l);
    return 1 + as_integer(3 * l.norm_squared(), "3 ||l||^2");
}

Int incidence_degree(const FibrationForm& l)
{
    require_nonzero(l);
    return as_integer(2 * l.norm_squared(), "2 ||l||^2");
}

Int canonical_degree(const FibrationForm& l)
{
    require_nonzero(l);
    return as_integer(6 * l.norm_squared(), "6 ||l||^2");
}

std::vector<FibrationForm> ns_basis()
{
    std::vector<std::array<QuadInt, 5>> coords;
    for (int k = 0; k < 5; ++k) {
        std::array<QuadInt, 5> c{};
        c[k] = 1;
        coords.push_back(c);
    }
    for (int k = 0; k < 5; ++k)
        for (int l = k + 1; l < 5; ++l) {
            std::array<QuadInt, 5> c{};
            c[k] = 1;
            c[l] = 1;
            coords.push_back(c);
        }
    for (int k = 0; k < 5; ++k)
        for (int l = k + 1; l < 5; ++l) {
            std::array<QuadInt, 5> c{};
            c[k] = 1;
            c[l] = QuadInt::nu();
            coords.push_back(c);
        }
    std::vector<FibrationForm> out;
    for (auto& c : coords) out.emplace_back(c);
    return out;
}

std::vector<std::string> ns_basis_labels()
{
    std::vector<std::string> out;
    for (int k = 1; k <= 5; ++k) out.push_back("y" + std::to_string(k));
    for (int k = 1; k <= 5; ++k)
        for (int l = k + 1; l <= 5; ++l) out.push_back("y" + std::to_string(k) + "+y" + std::to_string(l));
    for (int k = 1; k <= 5; ++k)
        for (int l = k + 1; l <= 5; ++l) out.push_back("y" + std::to_string(k) + "+nu*y" + std::to_string(l));
    return out;
}

Matrix<Int> gram_25()
{
    static const Matrix<Int> g = [] {
        const auto basis = ns_basis();
        Matrix<Int> m(25, 25);
        for (std::size_t i = 0; i < 25; ++i)
            for (std::size_t j = i + 1; j < 25; ++j) m(i, j) = m(j, i) = fiber_intersection(basis[i], basis[j]);
        return m;
    }();
    return g;
}

Int gram_25_det() { return det(gram_25()); }

Rat intersect(const NSClass& a, const NSClass& b)
{
    const auto& g = gram_25();
    Rat s;
    for (std::size_t i = 0; i < 25; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < 25; ++j)
            if (b[j] != 0) s += a[i] * Rat(g(i, j)) * b[j];
    }
    return s;
}

Rat intersect_with_fibre(const NSClass& a, const FibrationForm& l)
{
    static const auto basis = ns_basis();
    Rat s;
    for (std::size_t i = 0; i < 25; ++i)
        if (a[i] != 0) s += a[i] * Rat(fiber_intersection(basis[i], l));
    return s;
}

ThetaData theta_class()
{
    const auto basis = ns_basis();
    const Matrix<Rat> g = gram_25().map([](const Int& x) { return Rat(x); });
    Matrix<Rat> b(25, 1);
    for (std::size_t i = 0; i < 25; ++i) b(i, 0) = 4 * basis[i].norm_squared();

    ThetaData t;
    t.theta = solve(g, b).column(0);
    t.theta_integral = true;
    for (const auto& c : t.theta) {
        if (!is_integer(c)) t.theta_integral = false;
        else if (c.get_num() % 2 != 0) t.theta_has_odd_coordinate = true;
    }
    for (const auto& c : t.theta) {
        t.incidence.push_back(c / 2);
        t.canonical.push_back(3 * c / 2);
    }
    t.theta_square = intersect(t.theta, t.theta);
    t.incidence_square = intersect(t.incidence, t.incidence);
    t.canonical_square = intersect(t.canonical, t.canonical);
    return t;
}

NSLattice ns_s_lattice()
{
    const ThetaData t = theta_class();
    Matrix<Rat> gens(25, 26);
    for (std::size_t i = 0; i < 25; ++i) gens(i, i) = 1;
    gens.set_column(25, t.incidence);

    NSLattice l;
    l.basis = hnf_z(gens);
    const Matrix<Rat> g = gram_25().map([](const Int& x) { return Rat(x); });
    l.discriminant = as_integer(det(l.basis.transpose() * g * l.basis), "discriminant");
    l.index = as_integer(1 / det(l.basis), "index");
    l.half_theta_was_new = t.theta_has_odd_coordinate;
    return l;
}

NormalizedFibration normalize_fibration(const std::array<QuadRat, 5>& coords)
{
    Int den = 1;
    bool any = false;
    for (const auto& c : coords) {
        if (c.is_zero()) continue;
        any = true;
        den = lcm(den, lcm(c.a().get_den(), c.b().get_den()));
    }
    if (!any) throw std::invalid_argument("zero fibration form");

    std::array<QuadInt, 5> ints;
    QuadInt g;
    for (std::size_t i = 0; i < 5; ++i) {
        ints[i] = (QuadRat(Rat(den)) * coords[i]).to_quad_int();
        if (!ints[i].is_zero()) g = g.is_zero() ? ints[i] : quad_gcd(g, ints[i]);
    }
    for (auto& c : ints) c = divexact(c, g);
    int unit = 1;
    for (const auto& c : ints)
        if (!c.is_zero()) {
            unit = unit_normalizer(c);
            break;
        }
    for (auto& c : ints) c = QuadInt(unit) * c;

    QuadRat factor = QuadRat(g) * QuadRat(unit) / QuadRat(Rat(den));
    FibrationForm form(ints);
    const bool connected = form.is_primitive();
    return {std::move(form), std::move(factor), connected};
}

}  // namespace klein
