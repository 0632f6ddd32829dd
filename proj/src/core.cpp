#include "bredon/core.hpp"

#include <sstream>

namespace bredon {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::ConstraintViolation: return "CONSTRAINT_VIOLATION";
    case ErrorCode::NegativeMultiplicity: return "NEGATIVE_MULTIPLICITY";
    case ErrorCode::InvalidShift: return "INVALID_SHIFT";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::NegativeExponent: return "NEGATIVE_EXPONENT";
    case ErrorCode::InternalInconsistency: return "INTERNAL_INCONSISTENCY";
    case ErrorCode::TorsionUnknown: return "TORSION_UNKNOWN";
    case ErrorCode::InfeasibleBounds: return "INFEASIBLE_BOUNDS";
    case ErrorCode::InvalidConstraints: return "INVALID_CONSTRAINTS";
    case ErrorCode::UnknownName: return "UNKNOWN_NAME";
    case ErrorCode::ParameterRange: return "PARAMETER_RANGE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::SchemaError: return "SCHEMA_ERROR";
    }
    return "UNKNOWN_ERROR";
}

// ---------------------------------------------------------------------------
// M2

M2Element M2Element::positive(int rho_exp, int tau_exp) {
    if (rho_exp < 0 || tau_exp < 0)
        throw Error(ErrorCode::InvalidArgument, "positive-cone exponents must be >= 0");
    return M2Element(Kind::Positive, rho_exp, tau_exp);
}

M2Element M2Element::negative(int rho_div, int tau_div) {
    if (rho_div < 0 || tau_div < 0)
        throw Error(ErrorCode::InvalidArgument, "theta division exponents must be >= 0");
    return M2Element(Kind::Negative, rho_div, tau_div);
}

Bidegree M2Element::bidegree() const {
    switch (kind_) {
    case Kind::Positive: return {a_, a_ + b_};
    case Kind::Negative: return {-a_, -a_ - b_ - 2};
    case Kind::Zero: break;
    }
    throw Error(ErrorCode::InvalidArgument, "zero has no well-defined bidegree");
}

M2Element operator*(const M2Element& x, const M2Element& y) {
    using Kind = M2Element::Kind;
    if (x.is_zero() || y.is_zero()) return {};
    if (x.kind_ == Kind::Positive && y.kind_ == Kind::Positive)
        return M2Element(Kind::Positive, x.a_ + y.a_, x.b_ + y.b_);
    if (x.kind_ == Kind::Negative && y.kind_ == Kind::Negative) return {};

    const M2Element& pos = x.kind_ == Kind::Positive ? x : y;
    const M2Element& neg = x.kind_ == Kind::Positive ? y : x;
    // rho and tau cancel divided powers of theta; past that the product is zero.
    if (pos.a_ > neg.a_ || pos.b_ > neg.b_) return {};
    return M2Element(Kind::Negative, neg.a_ - pos.a_, neg.b_ - pos.b_);
}

M2Element m2_multiply(const M2Element& x, const M2Element& y) { return x * y; }

std::string M2Element::to_string() const {
    std::ostringstream out;
    switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::Positive:
        if (a_ == 0 && b_ == 0) return "1";
        if (a_ > 0) out << "rho" << (a_ > 1 ? "^" + std::to_string(a_) : "");
        if (b_ > 0) out << (a_ > 0 ? "*" : "") << "tau" << (b_ > 1 ? "^" + std::to_string(b_) : "");
        return out.str();
    case Kind::Negative:
        out << "theta";
        if (a_ > 0 || b_ > 0) {
            out << "/(";
            if (a_ > 0) out << "rho" << (a_ > 1 ? "^" + std::to_string(a_) : "");
            if (b_ > 0) out << (a_ > 0 ? "*" : "") << "tau" << (b_ > 1 ? "^" + std::to_string(b_) : "");
            out << ")";
        }
        return out.str();
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Polynomials

UnivariatePolynomial::UnivariatePolynomial(
    std::initializer_list<std::pair<const int, std::int64_t>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

void UnivariatePolynomial::add_term(int exponent, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto& slot = terms_[exponent];
    slot += coefficient;
    if (slot == 0) terms_.erase(exponent);
}

std::int64_t UnivariatePolynomial::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t UnivariatePolynomial::evaluate(std::int64_t t) const {
    std::int64_t sum = 0;
    for (const auto& [e, c] : terms_) {
        std::int64_t power = 1;
        for (int i = 0; i < e; ++i) power *= t;
        sum += c * power;
    }
    return sum;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    UnivariatePolynomial out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

namespace {

void append_term(std::ostringstream& out, std::int64_t c, const std::string& mono, bool first) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (mono.empty()) out << mag;
    else if (mag != 1) out << mag << mono;
    else out << mono;
}

std::string power(char var, int e) {
    if (e == 0) return "";
    if (e == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(e);
}

}  // namespace

std::string UnivariatePolynomial::to_string(char var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        append_term(out, c, power(var, e), first);
        first = false;
    }
    return out.str();
}

BivariatePolynomial::BivariatePolynomial(
    std::initializer_list<std::pair<const Exponents, std::int64_t>> terms) {
    for (const auto& [e, c] : terms) add_term(e.first, e.second, c);
}

void BivariatePolynomial::add_term(int u_exp, int v_exp, std::int64_t coefficient) {
    if (coefficient == 0) return;
    const Exponents key{u_exp, v_exp};
    auto& slot = terms_[key];
    slot += coefficient;
    if (slot == 0) terms_.erase(key);
}

std::int64_t BivariatePolynomial::coefficient(int u_exp, int v_exp) const {
    auto it = terms_.find({u_exp, v_exp});
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t BivariatePolynomial::evaluate(std::int64_t u, std::int64_t v) const {
    std::int64_t sum = 0;
    for (const auto& [e, c] : terms_) {
        std::int64_t term = c;
        for (int i = 0; i < e.first; ++i) term *= u;
        for (int i = 0; i < e.second; ++i) term *= v;
        sum += term;
    }
    return sum;
}

BivariatePolynomial BivariatePolynomial::shifted(int du, int dv) const {
    BivariatePolynomial out;
    for (const auto& [e, c] : terms_) out.add_term(e.first + du, e.second + dv, c);
    return out;
}

UnivariatePolynomial BivariatePolynomial::substitute(int u_power, int v_power) const {
    UnivariatePolynomial out;
    for (const auto& [e, c] : terms_) {
        const int exponent = e.first * u_power + e.second * v_power;
        if (exponent < 0)
            throw Error(ErrorCode::NegativeExponent,
                        "term u^" + std::to_string(e.first) + " v^" + std::to_string(e.second) +
                            " maps to t^" + std::to_string(exponent));
        out.add_term(exponent, c);
    }
    return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
    return *this;
}

std::string BivariatePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        append_term(out, c, power('u', e.first) + power('v', e.second), first);
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// NormalFormModule

int NormalFormModule::rank(int p, int q) const {
    auto it = free_.find({p, q});
    return it == free_.end() ? 0 : it->second;
}

int NormalFormModule::a_rank(int r, int n) const {
    auto it = antipodal_.find({r, n});
    return it == antipodal_.end() ? 0 : it->second;
}

int NormalFormModule::free_count() const {
    int total = 0;
    for (const auto& [key, mult] : free_) total += mult;
    return total;
}

int NormalFormModule::antipodal_count() const {
    int total = 0;
    for (const auto& [key, mult] : antipodal_) total += mult;
    return total;
}

int NormalFormModule::antipodal_sphere0_count() const {
    int total = 0;
    for (const auto& [key, mult] : antipodal_)
        if (key.n == 0) total += mult;
    return total;
}

int NormalFormModule::antipodal_positive_count() const {
    return antipodal_count() - antipodal_sphere0_count();
}

bool NormalFormModule::cw_valid() const {
    for (const auto& [key, mult] : free_)
        if (!(key.p >= key.q && key.q >= 0)) return false;
    for (const auto& [key, mult] : antipodal_)
        if (key.r < 0 || key.n < 0) return false;
    return true;
}

std::vector<FreeSummand> NormalFormModule::free_summands() const {
    std::vector<FreeSummand> out;
    out.reserve(free_.size());
    for (const auto& [key, mult] : free_) out.push_back({key.p, key.q, mult});
    return out;
}

std::vector<AntipodalSummand> NormalFormModule::antipodal_summands() const {
    std::vector<AntipodalSummand> out;
    out.reserve(antipodal_.size());
    for (const auto& [key, mult] : antipodal_) out.push_back({key.r, key.n, mult});
    return out;
}

bool operator<(const NormalFormModule& a, const NormalFormModule& b) {
    if (a.free_ != b.free_) return a.free_ < b.free_;
    return a.antipodal_ < b.antipodal_;
}

std::string NormalFormModule::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << " + ";
        first = false;
    };
    for (const auto& [key, mult] : free_) {
        sep();
        if (key.p == 0 && key.q == 0) out << "M2";
        else out << "S^{" << key.p << "," << key.q << "}M2";
        if (mult > 1) out << "^" << mult;
    }
    for (const auto& [key, mult] : antipodal_) {
        sep();
        if (key.r == 0) out << "A" << key.n;
        else out << "S^{" << key.r << ",0}A" << key.n;
        if (mult > 1) out << "^" << mult;
    }
    return out.str();
}

namespace {

void check_free_key(int p, int q, bool cw_flag) {
    if (cw_flag && !(p >= q && q >= 0))
        throw Error(ErrorCode::ConstraintViolation,
                    "free summand (" + std::to_string(p) + "," + std::to_string(q) +
                        ") violates p >= q >= 0");
}

void check_antipodal_key(int r, int n, bool cw_flag) {
    if (cw_flag && (r < 0 || n < 0))
        throw Error(ErrorCode::ConstraintViolation,
                    "antipodal summand (" + std::to_string(r) + "," + std::to_string(n) +
                        ") violates r, n >= 0");
}

void check_multiplicity(int mult, const std::string& where) {
    if (mult < 1)
        throw Error(ErrorCode::NegativeMultiplicity,
                    "multiplicity " + std::to_string(mult) + " at " + where);
}

std::string key_text(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

NormalFormModule make_module(std::span<const FreeSummand> free,
                             std::span<const AntipodalSummand> antipodal, bool cw_flag) {
    NormalFormModule m;
    for (const auto& s : free) {
        check_multiplicity(s.multiplicity, "free " + key_text(s.p, s.q));
        check_free_key(s.p, s.q, cw_flag);
        m.free_[{s.p, s.q}] += s.multiplicity;
    }
    for (const auto& s : antipodal) {
        check_multiplicity(s.multiplicity, "antipodal " + key_text(s.r, s.n));
        check_antipodal_key(s.r, s.n, cw_flag);
        m.antipodal_[{s.r, s.n}] += s.multiplicity;
    }
    return m;
}

NormalFormModule make_module(const NormalFormModule::FreeMap& free,
                             const NormalFormModule::AntipodalMap& antipodal, bool cw_flag) {
    NormalFormModule m;
    for (const auto& [key, mult] : free) {
        if (mult == 0) continue;
        check_multiplicity(mult, "free " + key_text(key.p, key.q));
        check_free_key(key.p, key.q, cw_flag);
        m.free_.emplace(key, mult);
    }
    for (const auto& [key, mult] : antipodal) {
        if (mult == 0) continue;
        check_multiplicity(mult, "antipodal " + key_text(key.r, key.n));
        check_antipodal_key(key.r, key.n, cw_flag);
        m.antipodal_.emplace(key, mult);
    }
    return m;
}

NormalFormModule direct_sum(const NormalFormModule& a, const NormalFormModule& b) {
    NormalFormModule out = a;
    for (const auto& [key, mult] : b.free_) out.free_[key] += mult;
    for (const auto& [key, mult] : b.antipodal_) out.antipodal_[key] += mult;
    return out;
}

NormalFormModule suspend(const NormalFormModule& m, int p, int q) {
    if (q < 0 || q > p)
        throw Error(ErrorCode::InvalidShift,
                    "suspension " + key_text(p, q) + " requires p >= q >= 0");
    NormalFormModule out;
    for (const auto& [key, mult] : m.free_) out.free_.emplace(FreeKey{key.p + p, key.q + q}, mult);
    for (const auto& [key, mult] : m.antipodal_)
        out.antipodal_.emplace(AntipodalKey{key.r + p, key.n}, mult);
    return out;
}

BivariatePolynomial rank_polynomial(const NormalFormModule& m) {
    BivariatePolynomial out;
    for (const auto& [key, mult] : m.free()) out.add_term(key.p, key.q, mult);
    return out;
}

}  // namespace bredon
