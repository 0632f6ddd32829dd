#pragma once

// Invariants read off a normal-form module: fixed-point cohomology
// (rho-localization), Borel cohomology (tau-localization), singular
// cohomology with its involution, forgetful-map images, homology duals and
// the Poincare-duality symmetries of Real manifolds.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bredon/core.hpp"

namespace bredon {

/// Finitely supported map degree -> dimension, zero entries never stored.
class GradedDims {
public:
    using Entries = std::map<int, int>;

    GradedDims() = default;
    GradedDims(std::initializer_list<std::pair<const int, int>> entries);

    void add(int degree, int count);
    int at(int degree) const;
    int total() const;
    bool empty() const noexcept { return entries_.empty(); }
    const Entries& entries() const noexcept { return entries_; }

    GradedDims shifted(int by) const;
    UnivariatePolynomial to_polynomial() const;

    bool operator==(const GradedDims&) const = default;

private:
    Entries entries_;
};

/// Graded F2-vector space with involution: per degree, a number of trivial
/// lines and of regular summands F2[C2] (the involution swaps the basis).
struct C2GradedSpace {
    GradedDims trivial;
    GradedDims regular;

    int dim(int degree) const { return trivial.at(degree) + 2 * regular.at(degree); }
    /// Dimension of the subspace fixed by the involution.
    int fixed_dim(int degree) const { return trivial.at(degree) + regular.at(degree); }
    int total_dim() const { return trivial.total() + 2 * regular.total(); }
    GradedDims dims() const;
    GradedDims fixed_dims() const;

    bool operator==(const C2GradedSpace&) const = default;
};

/// F2[z]-module in normal form: free shifted copies S^p F2[z] and
/// truncations S^r F2[z]/(z^{n+1}).
struct BorelModule {
    std::map<int, int> free;
    std::map<std::pair<int, int>, int> torsion;  // (r, n) -> count

    bool operator==(const BorelModule&) const = default;
};

/// Bigraded Bredon homology in normal form. Free key (p,q) stands for
/// S^{p,q}M2^op and antipodal key (r,n) for S^{r,0}A_n^op.
struct HomologyModule {
    NormalFormModule module;
    bool opposite = true;

    bool operator==(const HomologyModule&) const = default;
};

struct PdViolation {
    enum class Kind { Free, Antipodal };
    Kind kind = Kind::Free;
    std::pair<int, int> key;     // the side with the larger count
    std::pair<int, int> mirror;  // its Poincare-dual partner
    int count = 0;
    int mirror_count = 0;

    bool operator==(const PdViolation&) const = default;
};

struct PdResult {
    bool holds = true;
    std::vector<PdViolation> violations;
};

struct ValidationCheck {
    std::string name;
    bool passed = true;
    std::vector<std::pair<int, int>> offending;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    PdResult pd;

    bool passed() const;
    const ValidationCheck* find(const std::string& name) const;
};

// Names of the checks emitted by real_manifold_validate.
namespace checks {
inline constexpr const char* free_weight_bound = "free_weight_bound";           // q <= n
inline constexpr const char* antipodal_dimension = "antipodal_dimension_bound";  // r+t <= 2n
inline constexpr const char* antipodal_positive_shift = "antipodal_positive_shift";  // r > 0
inline constexpr const char* antipodal_strict_dimension = "antipodal_strict_bound";  // r+t < 2n
inline constexpr const char* base_point_summand = "base_point_summand";  // Rk^{0,0} = 1
inline constexpr const char* connectivity = "connectivity";              // b_0 = 1
inline constexpr const char* pd_symmetry = "pd_symmetry";
}  // namespace checks

/// Betti numbers of the fixed locus: free summand (p,q) adds one in degree p-q.
GradedDims rho_localize(const NormalFormModule& m);

/// P(t) = R(t, 1/t), computed by substitution in the rank polynomial.
/// Throws NegativeExponent when a free key has q > p.
UnivariatePolynomial fixed_poincare_polynomial(const NormalFormModule& m);

BorelModule tau_localize(const NormalFormModule& m);
BorelModule shifted(const BorelModule& b, int by);

C2GradedSpace underlying_singular(const NormalFormModule& m);

/// Dimensions of the image of the forgetful map to singular cohomology.
GradedDims forgetful_image_dims(const NormalFormModule& m);

HomologyModule homology_dual(const NormalFormModule& m);

/// Reindex S^{2n,n}(H^op) back to cohomological keys: free (p,q) -> (2n-p, n-q),
/// antipodal (s,t) -> (2n-s, t). For a Poincare-dual module this inverts homology_dual.
NormalFormModule poincare_reindex(const HomologyModule& h, int n);

FreeKey pd_mirror(FreeKey key, int n);
AntipodalKey pd_mirror(AntipodalKey key, int n);

PdResult pd_symmetric(const NormalFormModule& m, int n);

ValidationReport real_manifold_validate(const NormalFormModule& m, int n, bool has_fixed_point,
                                        bool connected);

}  // namespace bredon
