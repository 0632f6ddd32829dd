#pragma once

// Maximal / Galois-Maximal classification and the equivalent
// characterizations: Smith-Thom totals, Borel freeness, Hodge expressivity.

#include <optional>
#include <string_view>

#include "bredon/core.hpp"
#include "bredon/localization.hpp"

namespace bredon {

/// Ordered from strongest to weakest: every Maximal space is Galois-Maximal.
enum class MaximalityClass { Maximal, GaloisMaximalOnly, Neither };

/// "M", "GM" or "NEITHER".
std::string_view to_string(MaximalityClass c) noexcept;
std::optional<MaximalityClass> parse_maximality_class(std::string_view text) noexcept;

/// True for Maximal and GaloisMaximalOnly.
inline bool is_galois_maximal(MaximalityClass c) noexcept { return c != MaximalityClass::Neither; }

struct SmithThomReport {
    int fixed_total = 0;             // sum of Betti numbers of the fixed locus
    int group_cohomology_total = 0;  // sum of dim H^1(C2, H^k(X))
    int singular_total = 0;          // sum of Betti numbers of X
    MaximalityClass maximality = MaximalityClass::Maximal;

    bool operator==(const SmithThomReport&) const = default;
};

/// Maximal iff no antipodal summands; GM iff they are all A_0.
MaximalityClass classify(const NormalFormModule& m);

/// Totals |I|, |I| + 2|J+|, |I| + 2|J0| + 2|J+|. The class is recomputed from
/// the totals and must agree with classify(); InternalInconsistency otherwise.
SmithThomReport smith_thom_report(const NormalFormModule& m);

/// H^1(C2; -) degreewise: trivial lines survive, regular summands do not.
GradedDims group_cohomology_dims(const C2GradedSpace& s);

MaximalityClass borel_classify(const BorelModule& b);

/// H(t,1) = R(t,1/t). torsion_free is the caller's assertion about integral
/// cohomology; an empty optional throws TorsionUnknown.
bool hodge_expressive_check(const NormalFormModule& m, const BivariatePolynomial& hodge,
                            std::optional<bool> torsion_free);

/// Rk^{p+q,q} = h^{p,q} for all p, q >= 0.
bool hodge_birank_check(const NormalFormModule& m, const BivariatePolynomial& hodge);

}  // namespace bredon
