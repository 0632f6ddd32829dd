#include "bredon/classification.hpp"

#include <set>

namespace bredon {

std::string_view to_string(MaximalityClass c) noexcept {
    switch (c) {
    case MaximalityClass::Maximal: return "M";
    case MaximalityClass::GaloisMaximalOnly: return "GM";
    case MaximalityClass::Neither: return "NEITHER";
    }
    return "?";
}

std::optional<MaximalityClass> parse_maximality_class(std::string_view text) noexcept {
    if (text == "M") return MaximalityClass::Maximal;
    if (text == "GM") return MaximalityClass::GaloisMaximalOnly;
    if (text == "NEITHER") return MaximalityClass::Neither;
    return std::nullopt;
}

MaximalityClass classify(const NormalFormModule& m) {
    if (m.antipodal().empty()) return MaximalityClass::Maximal;
    for (const auto& [key, mult] : m.antipodal())
        if (key.n > 0) return MaximalityClass::Neither;
    return MaximalityClass::GaloisMaximalOnly;
}

SmithThomReport smith_thom_report(const NormalFormModule& m) {
    const int free = m.free_count();
    const int j0 = m.antipodal_sphere0_count();
    const int jplus = m.antipodal_positive_count();

    SmithThomReport report;
    report.fixed_total = free;
    report.group_cohomology_total = free + 2 * jplus;
    report.singular_total = free + 2 * j0 + 2 * jplus;

    MaximalityClass from_totals = MaximalityClass::Neither;
    if (report.fixed_total == report.singular_total) from_totals = MaximalityClass::Maximal;
    else if (report.fixed_total == report.group_cohomology_total)
        from_totals = MaximalityClass::GaloisMaximalOnly;

    report.maximality = classify(m);
    if (from_totals != report.maximality)
        throw Error(ErrorCode::InternalInconsistency,
                    "Smith-Thom totals give " + std::string(to_string(from_totals)) +
                        " but the normal form gives " +
                        std::string(to_string(report.maximality)));
    return report;
}

GradedDims group_cohomology_dims(const C2GradedSpace& s) {
    // F2[C2] is cohomologically trivial; a trivial line gives A/{a + a} = A.
    return s.trivial;
}

MaximalityClass borel_classify(const BorelModule& b) {
    if (b.torsion.empty()) return MaximalityClass::Maximal;
    for (const auto& [key, count] : b.torsion)
        if (key.second > 0) return MaximalityClass::Neither;
    return MaximalityClass::GaloisMaximalOnly;
}

bool hodge_expressive_check(const NormalFormModule& m, const BivariatePolynomial& hodge,
                            std::optional<bool> torsion_free) {
    if (!torsion_free)
        throw Error(ErrorCode::TorsionUnknown,
                    "Hodge expressivity needs an explicit torsion-freeness assertion");
    if (!*torsion_free) return false;
    return hodge.substitute(1, 0) == fixed_poincare_polynomial(m);
}

bool hodge_birank_check(const NormalFormModule& m, const BivariatePolynomial& hodge) {
    // Compare over the union of both supports: free key (P,Q) sits at Hodge
    // index (P-Q, Q).
    std::set<std::pair<int, int>> indices;
    for (const auto& [key, mult] : m.free()) indices.insert({key.p - key.q, key.q});
    for (const auto& [exps, c] : hodge.terms()) indices.insert(exps);
    for (const auto& [p, q] : indices) {
        if (p < 0 || q < 0) return false;
        if (m.rank(p + q, q) != hodge.coefficient(p, q)) return false;
    }
    return true;
}

}  // namespace bredon
