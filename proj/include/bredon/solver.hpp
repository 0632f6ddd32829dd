#pragma once

// Exhaustive enumeration of normal-form decompositions compatible with
// topological data (Betti numbers of X and of its fixed locus, Poincare
// duality, forgetful-map surjectivity), plus the surface and threefold
// Galois-Maximality criteria.

#include <optional>
#include <set>
#include <vector>

#include "bredon/classification.hpp"
#include "bredon/core.hpp"
#include "bredon/localization.hpp"

namespace bredon {

struct ConstraintSet {
    int dimension = 0;  // complex dimension n
    GradedDims betti_total;
    std::optional<GradedDims> betti_fixed;
    bool has_fixed_point = false;
    bool connected = false;
    bool poincare_dual = false;
    std::optional<std::set<int>> forgetful_onto_degrees;
    std::optional<MaximalityClass> class_filter;
};

struct SolveOptions {
    unsigned workers = 1;
};

/// Throws InfeasibleBounds when the Betti support leaves [0, 2n] and
/// InvalidConstraints when the set contradicts itself.
void validate_constraints(const ConstraintSet& c);

/// Every predicate a decomposition must meet, checked directly through the
/// localization and classification operations.
bool satisfies(const NormalFormModule& m, const ConstraintSet& c);

/// All cw-valid modules in the key box (p <= 2n, q <= min(p, n); antipodal
/// r >= 1 and r + n_j < 2n with a fixed point, r >= 0 and r + n_j <= 2n
/// without) that satisfy the constraints, in canonical order. The result does
/// not depend on the number of workers.
std::vector<NormalFormModule> enumerate_decompositions(const ConstraintSet& c,
                                                       const SolveOptions& options = {});

struct Prediction {
    bool applicable = false;
    // Weakest class the criterion guarantees; GaloisMaximalOnly means "M or GM".
    std::optional<MaximalityClass> prediction;

    bool admits(MaximalityClass actual) const;
};

/// Real surfaces with a real point and H^1 = 0 are GM.
Prediction krasnov_predict(const ConstraintSet& c);

/// Real threefolds with a real point, H^1 = 0 and forgetful map onto in degree 4 are GM.
Prediction threefold_predict(const ConstraintSet& c);

}  // namespace bredon
