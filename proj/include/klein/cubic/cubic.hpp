#pragma once

// Cubic forms in x1..x5, diagonal root-of-unity actions on them, and the
// tests used to show that certain eigenspaces contain no smooth cubic.

#include "klein/cubic/polynomial.hpp"
#include "klein/linalg/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace klein {

/// Degree-3 form with rational coefficients; only nonzero terms are stored.
class CubicForm {
public:
    CubicForm() = default;

    /// Throws std::invalid_argument unless m has degree 3.
    void set(const Monomial& m, const Rat& c);
    Rat coeff(const Monomial& m) const;
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// d f / d x_{i+1}, i in 0..4.
    Poly<RationalField> partial(int i) const;
    Poly<RationalField> as_poly() const;
    Rat evaluate(const std::array<Rat, kVars>& point) const;

    friend bool operator==(const CubicForm& a, const CubicForm& b) { return a.terms_ == b.terms_; }

private:
    std::map<Monomial, Rat> terms_;
};

/// x1 x5^2 + x5 x3^2 + x3 x4^2 + x4 x2^2 + x2 x1^2.
CubicForm klein_cubic();
CubicForm fermat_cubic();

/// f(A z): x_i is replaced by sum_j A(i, j) z_j.
CubicForm substitute(const CubicForm& f, const Matrix<Rat>& a);
/// The substitution matrix of (z1:..:z5) -> (z5:z1:z4:z2:z3).
Matrix<Rat> klein_permutation();

/// "x1^2*x2=1;x3^3=-2/3".  Repeated monomials add up.  Throws ParseError.
CubicForm parse_cubic(const std::string& text);
std::string format_cubic(const CubicForm& f);

/// The 35 monomials of degree 3, x1^3 first (lexicographically decreasing).
const std::vector<Monomial>& cubic_monomials();

struct WeightSystem {
    int modulus = 0;
    std::array<int, kVars> weights{};

    /// sum_i alpha_i w_i mod m.
    int character(const Monomial& m) const;
};

struct S3Decomposition {
    WeightSystem weights;
    /// classes[c] holds the monomials of character c, in cubic_monomials() order.
    std::vector<std::vector<Monomial>> classes;
    std::vector<std::size_t> multiplicities() const;
};

S3Decomposition s3_decomposition(const WeightSystem& w);

enum class CertificateKind { coordinate_point, sampled_evidence, none };
std::string to_string(CertificateKind k);

struct SingularityCertificate {
    CertificateKind kind = CertificateKind::none;
    int witness = 0;  // 1-based coordinate point index
};

/// Coordinate-point certificate at the smallest i whose support has neither
/// x_i^3 nor any x_i^2 x_j.
SingularityCertificate certify_singular_support(const std::vector<Monomial>& support);

struct SmoothnessOptions {
    /// Prime for the modular pre-pass; 0 disables it.
    std::uint64_t prime = 10007;
};

struct SmoothnessResult {
    bool smooth = false;
    /// Decided by the modular pre-pass (only ever for smooth forms).
    bool decided_mod_p = false;
};

/// Smooth iff the partial derivatives have no common projective zero,
/// decided from a grevlex Groebner basis.  Throws std::invalid_argument on f = 0.
SmoothnessResult smoothness_oracle(const CubicForm& f, const SmoothnessOptions& opts = {});
bool is_smooth(const CubicForm& f, const SmoothnessOptions& opts = {});

/// Normalized orbit representatives (1, a, b), a < b, of three-element sets
/// of pairwise non-conjugate units mod m, under multiplication by units.
std::vector<std::array<int, 3>> admissible_weight_orbits(int m);

struct SearchOptions {
    std::uint64_t seed = 0;
    int samples = 25;
    std::uint64_t prime = 10007;
};

struct EigenspaceReport {
    int character = 0;
    std::vector<Monomial> monomials;
    CertificateKind kind = CertificateKind::none;
    int witness = 0;
    int samples_tested = 0;
    int smooth_members = 0;
};

struct WeightCaseReport {
    WeightSystem weights;
    std::vector<std::size_t> multiplicities;
    std::vector<EigenspaceReport> eigenspaces;

    std::size_t count(CertificateKind k) const;
    int smooth_members() const;
    /// No smooth member found and every eigenspace has some certificate.
    bool all_singular() const;
};

/// Random members of the span of `support`: distinct positive integer
/// coefficients drawn from a generator seeded with `seed`.
std::vector<CubicForm> sample_members(const std::vector<Monomial>& support, int count, std::uint64_t seed);

/// Certifies one eigenspace: combinatorially if possible, otherwise by
/// sampling `opts.samples` members through the smoothness oracle.
EigenspaceReport certify_eigenspace(int character, const std::vector<Monomial>& support, const SearchOptions& opts,
                                    std::uint64_t stream);

/// Every eigenspace of one weight system; stream k of the generator is
/// seed + first_stream + k.
WeightCaseReport certify_weight_system(const WeightSystem& w, const SearchOptions& opts, std::uint64_t first_stream);

/// Weight systems (1,2,3,0,0) and (1,2,4,0,0) mod 7.
std::vector<WeightCaseReport> order7_nonexistence(const SearchOptions& opts);

struct Order11Report {
    WeightCaseReport x3;
    bool klein_monomials_in_chi0 = false;
    CertificateKind klein_chi0_certificate = CertificateKind::none;
    bool klein_smooth = false;
};

/// Weights (1,2,3,5,7) mod 11, plus the Klein weights (1,9,3,4,5) as a
/// positive control.
Order11Report order11_x3_elimination(const SearchOptions& opts);

inline const WeightSystem kKleinWeightSystem{11, {1, 9, 3, 4, 5}};
inline const WeightSystem kX3WeightSystem{11, {1, 2, 3, 5, 7}};

}  // namespace klein
