#include "klein/report/report.hpp"

#include "klein/arith/scalar_text.hpp"
#include "klein/cubic/cubic.hpp"
#include "klein/group/bounds.hpp"
#include "klein/ns/neron_severi.hpp"
#include "klein/period/polarization.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace klein {

using json = nlohmann::ordered_json;

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string fmt(const std::vector<QuadRat>& v)
{
    std::vector<std::string> parts;
    for (const auto& x : v) parts.push_back(format_scalar(x));
    return join(parts, ",");
}

template <class T, class F>
std::string fmt_matrix(const Matrix<T>& m, F cell)
{
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::string> parts;
        for (std::size_t j = 0; j < m.cols(); ++j) parts.push_back(cell(m(i, j)));
        rows.push_back(join(parts, ","));
    }
    return join(rows, ";");
}

std::string fmt(const Matrix<QuadRat>& m) { return fmt_matrix(m, [](const QuadRat& x) { return format_scalar(x); }); }
std::string fmt(const Matrix<F11>& m) { return fmt_matrix(m, [](F11 x) { return std::to_string(x.value()); }); }

template <class T, class F>
json json_matrix(const Matrix<T>& m, F cell)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(cell(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json json_matrix(const Matrix<QuadRat>& m) { return json_matrix(m, [](const QuadRat& x) { return format_scalar(x); }); }
json json_matrix(const Matrix<F11>& m) { return json_matrix(m, [](F11 x) { return x.value(); }); }
json json_matrix(const Matrix<Rat>& m) { return json_matrix(m, [](const Rat& x) { return x.get_str(); }); }
json json_matrix(const Matrix<Int>& m) { return json_matrix(m, [](const Int& x) { return x.get_str(); }); }

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string ratio(std::size_t good, std::size_t total) { return std::to_string(good) + "/" + std::to_string(total); }

class Checks {
public:
    Checks(VerificationReport& r, const SuiteOptions& o) : report_(r), opts_(o) {}

    void exact(const std::string& id, const std::string& expected, const std::function<std::string()>& compute)
    {
        run(id, expected, [&] { return std::make_pair(compute(), false); });
    }

    /// compute returns (value, sampled); sampled results are downgraded.
    void graded(const std::string& id, const std::string& expected,
                const std::function<std::pair<std::string, bool>()>& compute)
    {
        run(id, expected, compute);
    }

private:
    void run(const std::string& id, const std::string& expected,
             const std::function<std::pair<std::string, bool>()>& compute)
    {
        CheckResult c;
        c.id = id;
        c.expected = expected;
        const auto start = std::chrono::steady_clock::now();
        bool sampled = false;
        try {
            auto [value, s] = compute();
            c.computed = std::move(value);
            sampled = s;
        } catch (const std::exception& e) {
            c.computed = std::string("error: ") + e.what();
        }
        const auto stop = std::chrono::steady_clock::now();
        if (opts_.timing) c.ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        if (c.computed != c.expected)
            c.status = CheckStatus::fail;
        else
            c.status = sampled ? CheckStatus::evidence_only : CheckStatus::pass;
        report_.checks.push_back(std::move(c));
    }

    VerificationReport& report_;
    const SuiteOptions& opts_;
};

// ---------------------------------------------------------------- lattice

void lattice_suite(VerificationReport& r, const SuiteOptions& o)
{
    Checks ck(r, o);
    ck.exact("nu-minimal-polynomial", "0", [] {
        const QuadRat nu = QuadRat::nu();
        return format_scalar(nu * nu + nu + QuadRat(3));
    });
    ck.exact("norm-1p2nu", "11", [] {
        const QuadRat s(one_plus_two_nu());
        return format_scalar(s * s.conj());
    });
    ck.exact("sum-v", "0,0,0,0,0", [] {
        PeriodVector s;
        for (long k = 0; k <= 10; ++k) s += v_vector(k);
        return fmt(to_v_coords(s));
    });
    ck.exact("v5-coords", "1,1+nu,-1,1,nu", [] { return fmt(to_v_coords(v_vector(5))); });
    ck.exact("nu-v0", fmt(to_v_coords(v_vector(1) + v_vector(3) + v_vector(4) + v_vector(5) + v_vector(9))),
             [] { return fmt(to_v_coords(embed_nu(QuadRat::nu()) * v_vector(0))); });
    ck.exact("tau-order", "11", [] { return std::to_string(multiplicative_order(tau_matrix().m, 100)); });
    ck.exact("sigma-order", "5", [] { return std::to_string(multiplicative_order(sigma_matrix().m, 100)); });
    ck.exact("tau-on-v", "11/11", [] {
        std::size_t good = 0;
        for (long k = 0; k < 11; ++k) good += apply_auto(tau_matrix(), v_vector(k)) == v_vector(k + 1);
        return ratio(good, 11);
    });
    ck.exact("sigma-on-v", "11/11", [] {
        std::size_t good = 0;
        for (long k = 0; k < 11; ++k) good += apply_auto(sigma_matrix(), v_vector(k)) == v_vector(5 * k);
        return ratio(good, 11);
    });

    const ZnuLattice lambda0 = build_lambda0();
    const ZnuLattice lambda4 = build_lambda4();
    ck.exact("lambda0-equals-r0", fmt(r0_lattice().basis()), [&] { return fmt(lambda0.basis()); });
    ck.exact("lambda0-z-span", "true", [] { return yes_no(lambda0_z_span_equals_r0()); });
    ck.exact("dual-matrix", fmt(printed_dual_matrix()), [] { return fmt(dual_vectors_v()); });
    ck.exact("det-b", "1", [] { return format_scalar(det(printed_b_matrix())); });
    ck.exact("b-relation", fmt(r1_generators()), [] { return fmt(dual_vectors_v() * printed_b_matrix()); });
    ck.exact("lambda4-equals-r1", fmt(r1_lattice().basis()), [&] { return fmt(lambda4.basis()); });
    ck.exact("lambda4-contains-lambda0", "true", [&] { return yes_no(lambda4.contains(lambda0)); });

    const QuotientModel q = build_quotient();
    ck.exact("quotient-consistent", "true", [&] { return yes_no(quotient_is_consistent(q, lambda4)); });
    ck.exact("mhat-t", fmt(printed_mhat_t()), [&] { return fmt(q.mhat_t); });
    ck.exact("mhat-w", fmt(printed_mhat_w()), [&] { return fmt(q.mhat_w); });
    ck.exact("mhat-nilpotency", "4", [&] {
        const Matrix<F11> n = q.mhat_t - Matrix<F11>::identity(4);
        unsigned k = 1;
        while (k <= 8 && !power(n, k).is_zero()) ++k;
        return std::to_string(k);
    });
    ck.exact("invariant-subspaces", "5", [&] { return std::to_string(all_invariant_subspaces(q.mhat_t).size()); });

    const LatticeChain chain = lattice_chain(q);
    ck.exact("invariant-chain", "true", [&] {
        auto all = all_invariant_subspaces(q.mhat_t);
        bool same = all.size() == chain.subspaces.size();
        for (const auto& w : chain.subspaces)
            same = same && std::find(all.begin(), all.end(), w) != all.end();
        return yes_no(same);
    });
    ck.exact("lattice-index", "1,11,121,1331,14641", [&] {
        std::vector<std::string> parts;
        for (const auto& l : chain.lattices) parts.push_back(lattice_index(l, chain.lattices[0]).get_str());
        return join(parts, ",");
    });
    ck.exact("chain-ends", "true", [&] { return yes_no(chain.lattices[0] == lambda0 && chain.lattices[4] == lambda4); });
    ck.exact("lambda2-equals-r2", fmt(r2_lattice().basis()), [&] { return fmt(chain.lattices[2].basis()); });
    ck.exact("chain-nested", "4/4", [&] {
        std::size_t good = 0;
        for (std::size_t j = 0; j + 1 < 5; ++j) good += chain.lattices[j + 1].contains(chain.lattices[j]);
        return ratio(good, 4);
    });
    ck.exact("chain-tau-stable", "5/5", [&] {
        std::size_t good = 0;
        for (const auto& l : chain.lattices) good += stabilized_by_tau(l);
        return ratio(good, 5);
    });

    const HermitianReport h = hermitian_invariance_check();
    ck.exact("hermitian-tau-dimension", "5", [&] { return std::to_string(h.tau_dimension); });
    ck.exact("hermitian-tau-diagonal", "true", [&] { return yes_no(h.tau_solutions_diagonal); });
    ck.exact("hermitian-group-dimension", "1", [&] { return std::to_string(h.group_dimension); });
    ck.exact("hermitian-identity-invariant", "true", [&] { return yes_no(h.identity_invariant); });
    ck.exact("unitary", "true", [&] { return yes_no(h.sigma_unitary && h.tau_unitary); });

    const Matrix<Rat> gram2 = gram_alternating(chain.lattices[2], 1);
    ck.exact("polarization-antisymmetric", "5/5", [&] {
        std::size_t good = 0;
        for (const auto& l : chain.lattices) {
            const Matrix<Rat> g = gram_alternating(l, 1);
            good += g.transpose() == Rat(-1) * g;
        }
        return ratio(good, 5);
    });
    ck.exact("polarization-integral-lambda2", "true", [&] {
        bool ok = true;
        for (std::size_t i = 0; i < 10; ++i)
            for (std::size_t j = 0; j < 10; ++j) ok = ok && is_integer(gram2(i, j));
        return yes_no(ok);
    });

    const std::vector<PfaffianRow> table = pfaffian_table(chain);
    const char* expected[5] = {"14641", "121", "1", "1/121", "1/14641"};
    for (int j = 0; j < 5; ++j)
        ck.exact("pfaffian-j" + std::to_string(j), expected[j], [&, j] { return table[j].at_a1.get_str(); });
    ck.exact("pfaffian-homogeneity", "5/5", [&] {
        std::size_t good = 0;
        for (const auto& row : table) good += row.homogeneous;
        return ratio(good, 5);
    });
    ck.exact("pfaffian-squares", "5/5", [&] {
        std::size_t good = 0;
        for (const auto& row : table) good += row.is_square;
        return ratio(good, 5);
    });
    ck.exact("pfaffian-unique", "j=2,a=1", [&] {
        std::vector<std::string> parts;
        for (const auto& [j, a] : unimodular_pairs(table)) parts.push_back("j=" + std::to_string(j) + ",a=" + a.get_str());
        return join(parts, ";");
    });

    json d;
    json lattices = json::object();
    for (const auto& l : chain.lattices) lattices[l.label()] = json_matrix(l.basis());
    d["lattices"] = std::move(lattices);
    d["mhat_t"] = json_matrix(q.mhat_t);
    d["mhat_w"] = json_matrix(q.mhat_w);
    d["gram_lambda2"] = json_matrix(gram2);
    json pf = json::array();
    for (const auto& row : table)
        pf.push_back({{"j", row.j}, {"a1", row.at_a1.get_str()}, {"a2", row.at_a2.get_str()}});
    d["pfaffian"] = std::move(pf);
    r.data["lattice"] = std::move(d);
}

// ---------------------------------------------------------------- ns

std::vector<FibrationForm> random_forms(std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    auto small = [&] { return static_cast<long>(rng() % 7) - 3; };
    std::vector<FibrationForm> out;
    while (static_cast<int>(out.size()) < count) {
        std::array<QuadInt, 5> c;
        for (auto& x : c) {
            const long a = small();
            x = QuadInt(Int(a), Int(small()));
        }
        FibrationForm f(c);
        if (!f.is_zero()) out.push_back(std::move(f));
    }
    return out;
}

void ns_suite(VerificationReport& r, const SuiteOptions& o)
{
    Checks ck(r, o);
    ck.exact("y-basis-dual", "true", [] {
        return yes_no(y_basis_matrix() * u_basis_matrix() == Matrix<CycElem>::identity(5));
    });
    const auto basis = ns_basis();
    ck.exact("ns-basis-count", "25", [&] { return std::to_string(basis.size()); });
    ck.exact("ns-basis-primitive", "25/25", [&] {
        std::size_t good = 0;
        for (const auto& f : basis) good += f.is_primitive();
        return ratio(good, basis.size());
    });
    const Matrix<Int> g = gram_25();
    ck.exact("gram25-det", Int(4 * ipow(Int(11), 10)).get_str(), [] { return gram_25_det().get_str(); });
    ck.exact("gram25-rank", "25", [&] { return std::to_string(rank(g.map([](const Int& x) { return Rat(x); }))); });
    ck.exact("gram25-symmetric-zero-diagonal", "true", [&] {
        bool ok = g == g.transpose();
        for (std::size_t i = 0; i < 25; ++i) ok = ok && g(i, i) == 0;
        return yes_no(ok);
    });

    const ThetaData t = theta_class();
    ck.exact("theta-integral", "true", [&] { return yes_no(t.theta_integral); });
    ck.exact("theta-square", "20", [&] { return t.theta_square.get_str(); });
    ck.exact("incidence-square", "5", [&] { return t.incidence_square.get_str(); });
    ck.exact("canonical-square", "45", [&] { return t.canonical_square.get_str(); });

    const auto forms = random_forms(o.seed, 100);
    ck.exact("incidence-on-fibres", "100/100", [&] {
        std::size_t good = 0;
        for (const auto& f : forms) good += intersect_with_fibre(t.incidence, f) == Rat(incidence_degree(f));
        return ratio(good, forms.size());
    });
    ck.exact("canonical-three-incidence", "100/100", [&] {
        std::size_t good = 0;
        for (const auto& f : forms) {
            const Rat k = intersect_with_fibre(t.canonical, f);
            good += k == Rat(canonical_degree(f)) && canonical_degree(f) == 3 * incidence_degree(f);
        }
        return ratio(good, forms.size());
    });
    ck.exact("adjunction", "100/100", [&] {
        std::size_t good = 0;
        for (const auto& f : forms) good += 2 * genus(f) - 2 == canonical_degree(f);
        return ratio(good, forms.size());
    });

    const NSLattice ns = ns_s_lattice();
    ck.exact("half-theta-new", "true", [&] { return yes_no(ns.half_theta_was_new); });
    ck.exact("ns-discriminant", ipow(Int(11), 10).get_str(), [&] { return ns.discriminant.get_str(); });
    ck.exact("ns-index", "2", [&] { return ns.index.get_str(); });
    ck.exact("ns-rank", "25", [&] { return std::to_string(ns.basis.cols()); });
    ck.exact("discriminant-index-law", gram_25_det().get_str(),
             [&] { return Int(ns.discriminant * ns.index * ns.index).get_str(); });

    json d;
    d["basis"] = ns_basis_labels();
    d["gram25"] = json_matrix(g);
    json theta = json::array();
    for (const auto& c : t.theta) theta.push_back(c.get_str());
    d["theta"] = std::move(theta);
    d["gram25_det"] = gram_25_det().get_str();
    d["ns_discriminant"] = ns.discriminant.get_str();
    json norms = json::array();
    for (int i = 0; i < 5; ++i) norms.push_back(basis[i].norm_squared().get_str());
    d["y_norms"] = std::move(norms);
    r.data["ns"] = std::move(d);
}

// ---------------------------------------------------------------- cubic forms

std::string weights_tag(const WeightSystem& w)
{
    std::string s;
    for (int x : w.weights)
        if (x) s += std::to_string(x);
    return s;
}

std::string monomial_list(std::vector<Monomial> ms)
{
    std::sort(ms.begin(), ms.end());
    std::vector<std::string> parts;
    for (const auto& m : ms) parts.push_back(format_monomial(m));
    return join(parts, ",");
}

json case_json(const WeightCaseReport& c)
{
    json e = json::array();
    for (const auto& s : c.eigenspaces) {
        json ms = json::array();
        for (const auto& m : s.monomials) ms.push_back(format_monomial(m));
        e.push_back({{"character", s.character},
                     {"monomials", std::move(ms)},
                     {"certificate", to_string(s.kind)},
                     {"witness", s.witness},
                     {"samples", s.samples_tested},
                     {"smooth_members", s.smooth_members}});
    }
    json w = json::array();
    for (int x : c.weights.weights) w.push_back(x);
    return {{"modulus", c.weights.modulus},
            {"weights", std::move(w)},
            {"multiplicities", c.multiplicities},
            {"coordinate_point_certificates", c.count(CertificateKind::coordinate_point)},
            {"sampled_certificates", c.count(CertificateKind::sampled_evidence)},
            {"eigenspaces", std::move(e)}};
}

void eigenspace_checks(Checks& ck, const std::string& prefix, const WeightCaseReport& c)
{
    for (const auto& e : c.eigenspaces)
        ck.graded(prefix + "-chi" + std::to_string(e.character), "singular", [&e] {
            const bool singular = e.kind != CertificateKind::none;
            return std::make_pair(std::string(singular ? "singular" : "not certified"),
                                  e.kind == CertificateKind::sampled_evidence);
        });
}

SearchOptions search_options(const SuiteOptions& o) { return {o.seed, o.samples, o.prime}; }

void order7_suite(VerificationReport& r, const SuiteOptions& o)
{
    Checks ck(r, o);
    ck.exact("admissible-orbits", "(1,2,3),(1,2,4)", [] {
        std::vector<std::string> parts;
        for (const auto& t : admissible_weight_orbits(7))
            parts.push_back("(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
        return join(parts, ",");
    });
    const WeightSystem first{7, {1, 2, 3, 0, 0}};
    ck.exact("s3-multiplicities-123", "6,4,6,6,5,4,4", [&] {
        std::vector<std::string> parts;
        for (auto m : s3_decomposition(first).multiplicities()) parts.push_back(std::to_string(m));
        return join(parts, ",");
    });
    std::vector<Monomial> printed;
    for (const char* s : {"x4^3", "x4^2*x5", "x4*x5^2", "x5^3", "x2^2*x3", "x3^2*x1"}) printed.push_back(parse_monomial(s));
    ck.exact("chi0-monomials-123", monomial_list(printed),
             [&] { return monomial_list(s3_decomposition(first).classes[0]); });
    ck.exact("chi0-certificate-123", "coordinate-point", [&] {
        return to_string(certify_singular_support(s3_decomposition(first).classes[0]).kind);
    });

    const auto cases = order7_nonexistence(search_options(o));
    json d = json::array();
    int smooth = 0;
    for (const auto& c : cases) {
        const std::string tag = "order7-" + weights_tag(c.weights);
        ck.exact(tag + "-eigenspaces", "7", [&] { return std::to_string(c.eigenspaces.size()); });
        eigenspace_checks(ck, tag, c);
        smooth += c.smooth_members();
        d.push_back(case_json(c));
    }
    ck.exact("order7-smooth-members", "0", [&] { return std::to_string(smooth); });
    r.data["order7"] = std::move(d);
}

void order11_suite(VerificationReport& r, const SuiteOptions& o)
{
    Checks ck(r, o);
    const Order11Report rep = order11_x3_elimination(search_options(o));
    ck.exact("x3-eigenspaces", "11", [&] { return std::to_string(rep.x3.eigenspaces.size()); });
    eigenspace_checks(ck, "x3", rep.x3);
    ck.exact("x3-smooth-members", "0", [&] { return std::to_string(rep.x3.smooth_members()); });

    const CubicForm klein = klein_cubic();
    ck.exact("klein-monomial-count", "5", [&] { return std::to_string(klein.size()); });
    ck.exact("klein-g-invariant", "true", [&] { return yes_no(substitute(klein, klein_permutation()) == klein); });
    ck.exact("klein-weight-eigenvector", "0", [&] {
        std::set<int> chars;
        for (const auto& [m, c] : klein.terms()) chars.insert(kKleinWeightSystem.character(m));
        if (chars.size() != 1) return std::string("mixed");
        return std::to_string(*chars.begin());
    });
    ck.exact("klein-chi0-contains-klein", "true", [&] { return yes_no(rep.klein_monomials_in_chi0); });
    ck.exact("klein-chi0-uncertified", "none", [&] { return to_string(rep.klein_chi0_certificate); });
    ck.exact("klein-smooth", "smooth", [&] { return rep.klein_smooth ? "smooth" : "singular"; });
    ck.exact("fermat-smooth", "smooth", [&] { return is_smooth(fermat_cubic(), {o.prime}) ? "smooth" : "singular"; });

    json d;
    d["x3"] = case_json(rep.x3);
    d["klein_chi0_certificate"] = to_string(rep.klein_chi0_certificate);
    r.data["order11"] = std::move(d);
}

// ---------------------------------------------------------------- group order

void group_suite(VerificationReport& r, const SuiteOptions& o)
{
    Checks ck(r, o);
    json orders = json::object();
    std::vector<Int> values;
    for (long p : kBoundPrimes) {
        // p^{d(d-1)/2} prod_{k=1}^{d} (p^k - 1)
        Int closed = ipow(Int(p), 45);
        for (unsigned k = 1; k <= 10; ++k) closed *= ipow(Int(p), k) - 1;
        const Int a = gl_order(Int(p), 10);
        ck.exact("gl10-" + std::to_string(p), closed.get_str(), [&] { return a.get_str(); });
        orders[std::to_string(p)] = a.get_str();
        values.push_back(a);
    }
    const Int bound = automorphism_order_bound();
    const Int printed = Int(11) * 7 * ipow(Int(5), 2) * ipow(Int(3), 6) * ipow(Int(2), 23);
    ck.exact("automorphism-bound", printed.get_str(), [&] { return bound.get_str(); });
    ck.exact("automorphism-bound-factorization", "11*7*5^2*3^6*2^23",
             [&] { return format_factorization(factorize(bound)); });
    ck.exact("bound-divides-each", "4/4", [&] {
        std::size_t good = 0;
        for (const auto& a : values) good += a % bound == 0;
        return ratio(good, values.size());
    });

    json d;
    d["orders"] = std::move(orders);
    d["gcd"] = bound.get_str();
    d["factorization"] = format_factorization(factorize(bound));
    r.data["group-order"] = std::move(d);
}

using SuiteFn = void (*)(VerificationReport&, const SuiteOptions&);

SuiteFn suite_function(const std::string& name)
{
    if (name == "lattice") return lattice_suite;
    if (name == "ns") return ns_suite;
    if (name == "order7") return order7_suite;
    if (name == "order11") return order11_suite;
    if (name == "group-order") return group_suite;
    return nullptr;
}

json fibration_json(const NormalizedFibration& n)
{
    std::vector<QuadRat> y;
    for (const auto& c : n.form.y_coords()) y.push_back(QuadRat(c));
    return {{"representative", fmt(y)},
            {"factor", format_scalar(n.factor)},
            {"connected", n.connected},
            {"norm_squared", n.form.norm_squared().get_str()},
            {"genus", genus(n.form).get_str()},
            {"incidence_degree", incidence_degree(n.form).get_str()},
            {"canonical_degree", canonical_degree(n.form).get_str()}};
}

NormalizedFibration parse_fibration(const std::string& text)
{
    const auto v = parse_scalar_list(text);
    if (v.size() != 5) throw std::invalid_argument("expected 5 coordinates, got " + std::to_string(v.size()));
    return normalize_fibration({v[0], v[1], v[2], v[3], v[4]});
}

}  // namespace

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::evidence_only: return "evidence-only";
    }
    return "fail";
}

bool VerificationReport::any_failed() const
{
    return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

const CheckResult* VerificationReport::find(const std::string& id) const
{
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"lattice", "ns", "order7", "order11", "group-order"};
    return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& opts)
{
    if (opts.samples < 0) throw UsageError("--samples must be nonnegative");
    if (opts.prime) {
        try {
            PrimeField check(opts.prime);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--prime: ") + e.what());
        }
    }
    VerificationReport r;
    r.suite = name;
    r.seed = opts.seed;
    if (name == "all") {
        for (const auto& s : suite_names()) suite_function(s)(r, opts);
        return r;
    }
    SuiteFn fn = suite_function(name);
    if (!fn) throw UsageError("unknown suite '" + name + "'");
    fn(r, opts);
    return r;
}

json to_json(const VerificationReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(
            {{"id", c.id}, {"status", to_string(c.status)}, {"expected", c.expected}, {"computed", c.computed}, {"ms", c.ms}});
    return {{"suite", r.suite}, {"version", r.version}, {"seed", r.seed}, {"checks", std::move(checks)}, {"data", r.data}};
}

int exit_code(const VerificationReport& r) { return r.any_failed() ? 1 : 0; }

json fibration_query(const std::string& l1, const std::optional<std::string>& l2)
{
    const NormalizedFibration a = parse_fibration(l1);
    json out = fibration_json(a);
    if (l2) {
        const NormalizedFibration b = parse_fibration(*l2);
        out["l2"] = fibration_json(b);
        out["intersection"] = fiber_intersection(a.form, b.form).get_str();
    }
    return out;
}

json smooth_query(const std::string& cubic, std::uint64_t prime)
{
    const CubicForm f = parse_cubic(cubic);
    if (f.is_zero()) throw std::invalid_argument("the cubic is zero");
    std::vector<Monomial> support;
    for (const auto& [m, c] : f.terms()) support.push_back(m);
    const SingularityCertificate cert = certify_singular_support(support);
    const SmoothnessResult s = smoothness_oracle(f, {prime});
    json out = {{"cubic", format_cubic(f)},
                {"smooth", s.smooth},
                {"decided_mod_p", s.decided_mod_p},
                {"support_certificate", to_string(cert.kind)}};
    if (cert.kind == CertificateKind::coordinate_point) out["witness"] = cert.witness;
    return out;
}

}  // namespace klein
