#pragma once

// Normal-form representation of bigraded Bredon cohomology modules with
// constant F2 coefficients. A module is a finite direct sum of free
// summands S^{p,q}M2 and antipodal summands S^{r,0}A_n; its isomorphism type
// is exactly the pair of multiplicity maps (bigraded rank and a-rank).

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bredon/error.hpp"

namespace bredon {

/// Topological degree p and weight q of a bigraded group H^{p,q}.
struct Bidegree {
    int p = 0;
    int q = 0;
    auto operator<=>(const Bidegree&) const = default;
};

/// Element of the cohomology ring M2 of a point.
///
/// Every nonzero graded piece of M2 is one-dimensional over F2, so an element
/// is either zero or a single basis class: a positive-cone monomial
/// rho^a tau^b, or a negative-cone class theta / (rho^r tau^s).
class M2Element {
public:
    enum class Kind { Zero, Positive, Negative };

    M2Element() = default;

    static M2Element zero() { return {}; }
    static M2Element positive(int rho_exp, int tau_exp);
    static M2Element negative(int rho_div, int tau_div);
    static M2Element one() { return positive(0, 0); }
    static M2Element rho() { return positive(1, 0); }
    static M2Element tau() { return positive(0, 1); }
    static M2Element theta() { return negative(0, 0); }

    Kind kind() const noexcept { return kind_; }
    bool is_zero() const noexcept { return kind_ == Kind::Zero; }
    // For Positive these are the exponents of rho and tau; for Negative the
    // rho and tau division exponents.
    int rho_part() const noexcept { return a_; }
    int tau_part() const noexcept { return b_; }

    /// Bidegree of the class; throws InvalidArgument for zero, which lives in every degree.
    Bidegree bidegree() const;

    friend M2Element operator*(const M2Element& x, const M2Element& y);
    bool operator==(const M2Element&) const = default;

    std::string to_string() const;

private:
    M2Element(Kind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}

    Kind kind_ = Kind::Zero;
    int a_ = 0;
    int b_ = 0;
};

M2Element m2_multiply(const M2Element& x, const M2Element& y);

class UnivariatePolynomial {
public:
    using Terms = std::map<int, std::int64_t>;

    UnivariatePolynomial() = default;
    UnivariatePolynomial(std::initializer_list<std::pair<const int, std::int64_t>> terms);

    void add_term(int exponent, std::int64_t coefficient);
    std::int64_t coefficient(int exponent) const;
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    std::int64_t evaluate(std::int64_t t) const;

    UnivariatePolynomial& operator+=(const UnivariatePolynomial& other);
    friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) {
        return a += b;
    }
    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a,
                                          const UnivariatePolynomial& b);
    bool operator==(const UnivariatePolynomial&) const = default;

    std::string to_string(char var = 't') const;

private:
    Terms terms_;
};

/// Sparse polynomial in u, v with integer coefficients. Used for the bigraded
/// rank polynomial R_X(u,v) and for Hodge polynomials.
class BivariatePolynomial {
public:
    using Exponents = std::pair<int, int>;
    using Terms = std::map<Exponents, std::int64_t>;

    BivariatePolynomial() = default;
    BivariatePolynomial(std::initializer_list<std::pair<const Exponents, std::int64_t>> terms);

    void add_term(int u_exp, int v_exp, std::int64_t coefficient);
    std::int64_t coefficient(int u_exp, int v_exp) const;
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    std::int64_t evaluate(std::int64_t u, std::int64_t v) const;

    /// Multiply by the monomial u^du v^dv.
    BivariatePolynomial shifted(int du, int dv) const;

    /// Substitute u -> t^u_power, v -> t^v_power. Throws NegativeExponent if a
    /// resulting term would have a negative power of t.
    UnivariatePolynomial substitute(int u_power, int v_power) const;

    BivariatePolynomial& operator+=(const BivariatePolynomial& other);
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
        return a += b;
    }
    bool operator==(const BivariatePolynomial&) const = default;

    std::string to_string() const;

private:
    Terms terms_;
};

/// Key of a free summand S^{p,q}M2.
struct FreeKey {
    int p = 0;
    int q = 0;
    auto operator<=>(const FreeKey&) const = default;
};

/// Key of an antipodal summand S^{r,0}A_n.
struct AntipodalKey {
    int r = 0;
    int n = 0;
    auto operator<=>(const AntipodalKey&) const = default;
};

struct FreeSummand {
    int p = 0;
    int q = 0;
    int multiplicity = 1;
};

struct AntipodalSummand {
    int r = 0;
    int n = 0;
    int multiplicity = 1;
};

class NormalFormModule {
public:
    using FreeMap = std::map<FreeKey, int>;
    using AntipodalMap = std::map<AntipodalKey, int>;

    /// The zero module.
    NormalFormModule() = default;

    const FreeMap& free() const noexcept { return free_; }
    const AntipodalMap& antipodal() const noexcept { return antipodal_; }

    /// Bigraded rank Rk^{p,q}.
    int rank(int p, int q) const;
    /// Bigraded a-rank Rk_a^{r,n}.
    int a_rank(int r, int n) const;

    /// |I|, |J|, |J_0|, |J_+|, all counted with multiplicity.
    int free_count() const;
    int antipodal_count() const;
    int antipodal_sphere0_count() const;
    int antipodal_positive_count() const;

    bool is_zero() const noexcept { return free_.empty() && antipodal_.empty(); }
    bool is_free() const noexcept { return antipodal_.empty(); }

    /// p >= q >= 0 on free keys and r, n >= 0 on antipodal keys.
    bool cw_valid() const;

    std::vector<FreeSummand> free_summands() const;
    std::vector<AntipodalSummand> antipodal_summands() const;

    bool operator==(const NormalFormModule&) const = default;
    // Lexicographic on the canonical (free, antipodal) arrays.
    friend bool operator<(const NormalFormModule& a, const NormalFormModule& b);

    std::string to_string() const;

private:
    friend NormalFormModule make_module(std::span<const FreeSummand>,
                                        std::span<const AntipodalSummand>, bool);
    friend NormalFormModule make_module(const FreeMap&, const AntipodalMap&, bool);
    friend NormalFormModule direct_sum(const NormalFormModule&, const NormalFormModule&);
    friend NormalFormModule suspend(const NormalFormModule&, int, int);

    FreeMap free_;
    AntipodalMap antipodal_;
};

/// Build a module in canonical form; duplicate keys merge by addition.
/// Throws NegativeMultiplicity for multiplicities < 1 and, when cw_flag is
/// set, ConstraintViolation for a key outside p >= q >= 0, r >= 0, n >= 0.
NormalFormModule make_module(std::span<const FreeSummand> free,
                             std::span<const AntipodalSummand> antipodal, bool cw_flag = true);

/// Same as above from multiplicity maps; zero entries are dropped.
NormalFormModule make_module(const NormalFormModule::FreeMap& free,
                             const NormalFormModule::AntipodalMap& antipodal, bool cw_flag = true);

inline NormalFormModule make_module(std::initializer_list<FreeSummand> free,
                                    std::initializer_list<AntipodalSummand> antipodal = {},
                                    bool cw_flag = true) {
    return make_module(std::span<const FreeSummand>(free.begin(), free.size()),
                       std::span<const AntipodalSummand>(antipodal.begin(), antipodal.size()),
                       cw_flag);
}

NormalFormModule direct_sum(const NormalFormModule& a, const NormalFormModule& b);

/// S^{p,q} applied summandwise. Antipodal summands only move in topological
/// degree since S^{p,q}A_n ~ S^{p,0}A_n. Requires p >= q >= 0.
NormalFormModule suspend(const NormalFormModule& m, int p, int q);

/// R(u,v) = sum Rk^{p,q} u^p v^q.
BivariatePolynomial rank_polynomial(const NormalFormModule& m);

}  // namespace bredon
