#include "klein/cubic/cubic.hpp"

#include "klein/arith/scalar_text.hpp"
#include "klein/cubic/groebner.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <stdexcept>

namespace klein {

std::string format_monomial(const Monomial& m)
{
    std::string out;
    for (int i = 0; i < kVars; ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

Monomial parse_monomial(const std::string& text)
{
    Monomial m{};
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos || pos - start > 3) throw ParseError(start, "expected a small integer");
        return std::stoi(text.substr(start, pos - start));
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '1') {
        ++pos;
        skip_ws();
        if (pos != text.size()) throw ParseError(pos, "unexpected text after 1");
        return m;
    }
    while (true) {
        skip_ws();
        if (pos >= text.size() || text[pos] != 'x') throw ParseError(pos, "expected a variable x1..x5");
        const std::size_t var_pos = pos++;
        const int var = read_int();
        if (var < 1 || var > kVars) throw ParseError(var_pos, "variable index out of range");
        int e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            e = read_int();
        }
        m[var - 1] += e;
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '*') throw ParseError(pos, "expected '*'");
        ++pos;
    }
    return m;
}

void CubicForm::set(const Monomial& m, const Rat& c)
{
    if (degree(m) != 3) throw std::invalid_argument("monomial " + format_monomial(m) + " is not cubic");
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

Rat CubicForm::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Poly<RationalField> CubicForm::as_poly() const
{
    std::vector<Term<RationalField>> t;
    for (const auto& [m, c] : terms_) t.push_back({m, c});
    return make_poly(RationalField{}, std::move(t));
}

Poly<RationalField> CubicForm::partial(int i) const
{
    std::vector<Term<RationalField>> t;
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Monomial d = m;
        --d[i];
        t.push_back({d, c * m[i]});
    }
    return make_poly(RationalField{}, std::move(t));
}

Rat CubicForm::evaluate(const std::array<Rat, kVars>& point) const
{
    Rat s;
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (int i = 0; i < kVars; ++i)
            for (int k = 0; k < m[i]; ++k) v *= point[i];
        s += v;
    }
    return s;
}

CubicForm klein_cubic()
{
    CubicForm f;
    f.set({1, 0, 0, 0, 2}, 1);
    f.set({0, 0, 2, 0, 1}, 1);
    f.set({0, 0, 1, 2, 0}, 1);
    f.set({0, 2, 0, 1, 0}, 1);
    f.set({2, 1, 0, 0, 0}, 1);
    return f;
}

CubicForm fermat_cubic()
{
    CubicForm f;
    for (int i = 0; i < kVars; ++i) {
        Monomial m{};
        m[i] = 3;
        f.set(m, 1);
    }
    return f;
}

CubicForm substitute(const CubicForm& f, const Matrix<Rat>& a)
{
    const RationalField q;
    std::array<Poly<RationalField>, kVars> images;
    for (int i = 0; i < kVars; ++i) {
        std::vector<Term<RationalField>> t;
        for (int j = 0; j < kVars; ++j) {
            Monomial m{};
            m[j] = 1;
            t.push_back({m, a(i, j)});
        }
        images[i] = make_poly(q, std::move(t));
    }
    Poly<RationalField> total;
    for (const auto& [m, c] : f.terms()) {
        Poly<RationalField> p{{Monomial{}, c}};
        for (int i = 0; i < kVars; ++i)
            for (int k = 0; k < m[i]; ++k) p = poly_mul(q, p, images[i]);
        total = poly_add(q, total, p);
    }
    CubicForm out;
    for (const auto& t : total) out.set(t.m, t.c);
    return out;
}

Matrix<Rat> klein_permutation()
{
    constexpr int src[kVars] = {4, 0, 3, 1, 2};
    Matrix<Rat> a(kVars, kVars);
    for (int i = 0; i < kVars; ++i) a(i, src[i]) = 1;
    return a;
}

CubicForm parse_cubic(const std::string& text)
{
    CubicForm f;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string::npos) end = text.size();
        const std::string entry = text.substr(start, end - start);
        if (entry.find_first_not_of(" \t") != std::string::npos) {
            const std::size_t eq = entry.find('=');
            if (eq == std::string::npos) throw ParseError(start, "expected monomial=coefficient");
            Monomial m;
            QuadRat c;
            try {
                m = parse_monomial(entry.substr(0, eq));
            } catch (const ParseError& e) {
                throw ParseError(start + e.position(), e.message());
            }
            if (degree(m) != 3) throw ParseError(start, "monomial is not cubic");
            try {
                c = parse_scalar(entry.substr(eq + 1));
            } catch (const ParseError& e) {
                throw ParseError(start + eq + 1 + e.position(), e.message());
            }
            if (!c.is_rational()) throw ParseError(start + eq + 1, "coefficient must be rational");
            f.set(m, f.coeff(m) + c.a());
        }
        start = end + 1;
    }
    return f;
}

std::string format_cubic(const CubicForm& f)
{
    std::string out;
    for (const auto& m : cubic_monomials()) {
        Rat c = f.coeff(m);
        if (c == 0) continue;
        if (!out.empty()) out += ';';
        out += format_monomial(m) + '=' + c.get_str();
    }
    return out;
}

const std::vector<Monomial>& cubic_monomials()
{
    static const std::vector<Monomial> all = [] {
        std::vector<Monomial> out;
        for (int a = 3; a >= 0; --a)
            for (int b = 3 - a; b >= 0; --b)
                for (int c = 3 - a - b; c >= 0; --c)
                    for (int d = 3 - a - b - c; d >= 0; --d) out.push_back({a, b, c, d, 3 - a - b - c - d});
        return out;
    }();
    return all;
}

int WeightSystem::character(const Monomial& m) const
{
    long s = 0;
    for (int i = 0; i < kVars; ++i) s += static_cast<long>(m[i]) * weights[i];
    return static_cast<int>(((s % modulus) + modulus) % modulus);
}

std::vector<std::size_t> S3Decomposition::multiplicities() const
{
    std::vector<std::size_t> out;
    for (const auto& c : classes) out.push_back(c.size());
    return out;
}

S3Decomposition s3_decomposition(const WeightSystem& w)
{
    S3Decomposition d;
    d.weights = w;
    d.classes.resize(static_cast<std::size_t>(w.modulus));
    for (const auto& m : cubic_monomials()) d.classes[static_cast<std::size_t>(w.character(m))].push_back(m);
    return d;
}

std::string to_string(CertificateKind k)
{
    switch (k) {
    case CertificateKind::coordinate_point: return "coordinate-point";
    case CertificateKind::sampled_evidence: return "sampled-evidence";
    case CertificateKind::none: return "none";
    }
    return "none";
}

SingularityCertificate certify_singular_support(const std::vector<Monomial>& support)
{
    for (int i = 0; i < kVars; ++i) {
        // all partials vanish at the i-th coordinate point
        bool ok = true;
        for (const auto& m : support)
            if (m[i] >= 2) ok = false;
        if (ok) return {CertificateKind::coordinate_point, i + 1};
    }
    return {};
}

namespace {

template <class F>
std::vector<Poly<F>> partials_over(const F& f, const CubicForm& form)
{
    std::vector<Poly<F>> out;
    for (int i = 0; i < kVars; ++i) {
        std::vector<Term<F>> t;
        for (const auto& term : form.partial(i)) t.push_back({term.m, f.from_rat(term.c)});
        Poly<F> p = make_poly(f, std::move(t));
        if (!p.empty()) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

SmoothnessResult smoothness_oracle(const CubicForm& f, const SmoothnessOptions& opts)
{
    if (f.is_zero()) throw std::invalid_argument("smoothness of the zero form");
    SmoothnessResult r;
    if (opts.prime) {
        const PrimeField fp(opts.prime);
        std::vector<Poly<PrimeField>> gens;
        bool usable = true;
        try {
            gens = partials_over(fp, f);
        } catch (const ArithmeticError&) {
            usable = false;
        }
        if (usable && !gens.empty() && groebner_basis(fp, gens, true).zero_dimensional) {
            r.smooth = true;
            r.decided_mod_p = true;
            return r;
        }
    }
    const RationalField q;
    r.smooth = groebner_basis(q, partials_over(q, f), true).zero_dimensional;
    return r;
}

bool is_smooth(const CubicForm& f, const SmoothnessOptions& opts) { return smoothness_oracle(f, opts).smooth; }

std::vector<std::array<int, 3>> admissible_weight_orbits(int m)
{
    std::set<std::array<int, 3>> reps;
    for (int a = 1; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                const int s[3] = {a, b, c};
                bool ok = true;
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j)
                        if ((s[i] + s[j]) % m == 0) ok = false;
                if (!ok) continue;
                // smallest normalized image containing 1
                std::array<int, 3> best{m, m, m};
                for (int u = 1; u < m; ++u) {
                    std::array<int, 3> img;
                    for (int i = 0; i < 3; ++i) img[i] = s[i] * u % m;
                    std::sort(img.begin(), img.end());
                    if (img[0] == 1) best = std::min(best, img);
                }
                reps.insert(best);
            }
    return {reps.begin(), reps.end()};
}

std::size_t WeightCaseReport::count(CertificateKind k) const
{
    return static_cast<std::size_t>(
        std::count_if(eigenspaces.begin(), eigenspaces.end(), [k](const EigenspaceReport& e) { return e.kind == k; }));
}

int WeightCaseReport::smooth_members() const
{
    int n = 0;
    for (const auto& e : eigenspaces) n += e.smooth_members;
    return n;
}

bool WeightCaseReport::all_singular() const { return smooth_members() == 0 && count(CertificateKind::none) == 0; }

std::vector<CubicForm> sample_members(const std::vector<Monomial>& support, int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const std::uint64_t range = 10 + 4 * support.size();
    std::vector<CubicForm> out;
    for (int s = 0; s < count; ++s) {
        std::set<std::uint64_t> used;
        CubicForm f;
        for (const auto& m : support) {
            std::uint64_t c;
            do c = 1 + rng() % range;
            while (!used.insert(c).second);
            f.set(m, Rat(static_cast<unsigned long>(c)));
        }
        out.push_back(std::move(f));
    }
    return out;
}

EigenspaceReport certify_eigenspace(int character, const std::vector<Monomial>& support, const SearchOptions& opts,
                                    std::uint64_t stream)
{
    EigenspaceReport r;
    r.character = character;
    r.monomials = support;
    auto cert = certify_singular_support(support);
    if (cert.kind == CertificateKind::coordinate_point) {
        r.kind = cert.kind;
        r.witness = cert.witness;
        return r;
    }
    for (const auto& f : sample_members(support, opts.samples, opts.seed + stream)) {
        ++r.samples_tested;
        if (is_smooth(f, {opts.prime})) ++r.smooth_members;
    }
    r.kind = (r.samples_tested > 0 && r.smooth_members == 0) ? CertificateKind::sampled_evidence : CertificateKind::none;
    return r;
}

WeightCaseReport certify_weight_system(const WeightSystem& w, const SearchOptions& opts, std::uint64_t first_stream)
{
    WeightCaseReport r;
    r.weights = w;
    const S3Decomposition d = s3_decomposition(w);
    r.multiplicities = d.multiplicities();
    for (std::size_t c = 0; c < d.classes.size(); ++c)
        r.eigenspaces.push_back(certify_eigenspace(static_cast<int>(c), d.classes[c], opts, first_stream + c));
    return r;
}

std::vector<WeightCaseReport> order7_nonexistence(const SearchOptions& opts)
{
    std::vector<WeightCaseReport> out;
    std::uint64_t stream = 0;
    for (const auto& orbit : admissible_weight_orbits(7)) {
        const WeightSystem w{7, {orbit[0], orbit[1], orbit[2], 0, 0}};
        out.push_back(certify_weight_system(w, opts, stream));
        stream += 7;
    }
    return out;
}

Order11Report order11_x3_elimination(const SearchOptions& opts)
{
    Order11Report r;
    r.x3 = certify_weight_system(kX3WeightSystem, opts, 14);

    const S3Decomposition klein = s3_decomposition(kKleinWeightSystem);
    const auto& chi0 = klein.classes[0];
    const CubicForm k = klein_cubic();
    r.klein_monomials_in_chi0 = true;
    for (const auto& [m, c] : k.terms())
        if (std::find(chi0.begin(), chi0.end(), m) == chi0.end()) r.klein_monomials_in_chi0 = false;
    r.klein_chi0_certificate = certify_singular_support(chi0).kind;
    r.klein_smooth = is_smooth(k, {opts.prime});
    return r;
}

}  // namespace klein
