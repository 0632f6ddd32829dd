#include "bredon/localization.hpp"

#include <algorithm>
#include <set>
#include <type_traits>

namespace bredon {

GradedDims::GradedDims(std::initializer_list<std::pair<const int, int>> entries) {
    for (const auto& [d, c] : entries) add(d, c);
}

void GradedDims::add(int degree, int count) {
    if (count == 0) return;
    int& slot = entries_[degree];
    slot += count;
    if (slot == 0) entries_.erase(degree);
}

int GradedDims::at(int degree) const {
    auto it = entries_.find(degree);
    return it == entries_.end() ? 0 : it->second;
}

int GradedDims::total() const {
    int sum = 0;
    for (const auto& [d, c] : entries_) sum += c;
    return sum;
}

GradedDims GradedDims::shifted(int by) const {
    GradedDims out;
    for (const auto& [d, c] : entries_) out.add(d + by, c);
    return out;
}

UnivariatePolynomial GradedDims::to_polynomial() const {
    UnivariatePolynomial out;
    for (const auto& [d, c] : entries_) out.add_term(d, c);
    return out;
}

GradedDims C2GradedSpace::dims() const {
    GradedDims out = trivial;
    for (const auto& [d, c] : regular.entries()) out.add(d, 2 * c);
    return out;
}

GradedDims C2GradedSpace::fixed_dims() const {
    GradedDims out = trivial;
    for (const auto& [d, c] : regular.entries()) out.add(d, c);
    return out;
}

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

GradedDims rho_localize(const NormalFormModule& m) {
    // A_n summands are rho-torsion and vanish after localization.
    GradedDims out;
    for (const auto& [key, mult] : m.free()) out.add(key.p - key.q, mult);
    return out;
}

UnivariatePolynomial fixed_poincare_polynomial(const NormalFormModule& m) {
    return rank_polynomial(m).substitute(1, -1);
}

BorelModule tau_localize(const NormalFormModule& m) {
    BorelModule out;
    for (const auto& [key, mult] : m.free()) out.free[key.p] += mult;
    for (const auto& [key, mult] : m.antipodal()) out.torsion[{key.r, key.n}] += mult;
    return out;
}

BorelModule shifted(const BorelModule& b, int by) {
    BorelModule out;
    for (const auto& [p, c] : b.free) out.free[p + by] = c;
    for (const auto& [key, c] : b.torsion) out.torsion[{key.first + by, key.second}] = c;
    return out;
}

C2GradedSpace underlying_singular(const NormalFormModule& m) {
    C2GradedSpace out;
    for (const auto& [key, mult] : m.free()) out.trivial.add(key.p, mult);
    for (const auto& [key, mult] : m.antipodal()) {
        if (key.n == 0) {
            out.regular.add(key.r, mult);
        } else {
            out.trivial.add(key.r, mult);
            out.trivial.add(key.r + key.n, mult);
        }
    }
    return out;
}

GradedDims forgetful_image_dims(const NormalFormModule& m) {
    // psi(S^{p,q}M2) = S^p F2 and psi(S^{r,0}A_n) = S^r F2; for A_0 the image
    // line is the diagonal of F2[C2].
    GradedDims out;
    for (const auto& [key, mult] : m.free()) out.add(key.p, mult);
    for (const auto& [key, mult] : m.antipodal()) out.add(key.r, mult);
    return out;
}

HomologyModule homology_dual(const NormalFormModule& m) {
    NormalFormModule::AntipodalMap antipodal;
    for (const auto& [key, mult] : m.antipodal()) antipodal[{key.r + key.n, key.n}] += mult;
    return {make_module(m.free(), antipodal, false), true};
}

NormalFormModule poincare_reindex(const HomologyModule& h, int n) {
    NormalFormModule::FreeMap free;
    NormalFormModule::AntipodalMap antipodal;
    for (const auto& [key, mult] : h.module.free()) free[{2 * n - key.p, n - key.q}] += mult;
    for (const auto& [key, mult] : h.module.antipodal()) antipodal[{2 * n - key.r, key.n}] += mult;
    return make_module(free, antipodal, false);
}

FreeKey pd_mirror(FreeKey key, int n) { return {2 * n - key.p, n - key.q}; }

AntipodalKey pd_mirror(AntipodalKey key, int n) { return {2 * n - key.r - key.n, key.n}; }

namespace {

template <class Key>
void collect_violations(const std::map<Key, int>& counts, int n, PdViolation::Kind kind,
                        std::vector<PdViolation>& out) {
    auto count_of = [&](const Key& k) {
        auto it = counts.find(k);
        return it == counts.end() ? 0 : it->second;
    };
    auto as_pair = [](const Key& k) {
        if constexpr (std::is_same_v<Key, FreeKey>) return std::pair{k.p, k.q};
        else return std::pair{k.r, k.n};
    };
    std::set<std::pair<Key, Key>> seen;
    for (const auto& [key, mult] : counts) {
        const Key mirror = pd_mirror(key, n);
        const int mirror_count = count_of(mirror);
        if (mult == mirror_count) continue;
        const auto ordered = std::minmax(key, mirror);
        if (!seen.insert({ordered.first, ordered.second}).second) continue;
        PdViolation v;
        v.kind = kind;
        if (mult >= mirror_count) {
            v.key = as_pair(key);
            v.mirror = as_pair(mirror);
            v.count = mult;
            v.mirror_count = mirror_count;
        } else {
            v.key = as_pair(mirror);
            v.mirror = as_pair(key);
            v.count = mirror_count;
            v.mirror_count = mult;
        }
        out.push_back(v);
    }
}

}  // namespace

PdResult pd_symmetric(const NormalFormModule& m, int n) {
    PdResult result;
    collect_violations(m.free(), n, PdViolation::Kind::Free, result.violations);
    collect_violations(m.antipodal(), n, PdViolation::Kind::Antipodal, result.violations);
    result.holds = result.violations.empty();
    return result;
}

ValidationReport real_manifold_validate(const NormalFormModule& m, int n, bool has_fixed_point,
                                        bool connected) {
    ValidationReport report;

    ValidationCheck weight{checks::free_weight_bound, true, {}, "q <= n for every free summand"};
    for (const auto& [key, mult] : m.free())
        if (key.q > n) weight.offending.push_back({key.p, key.q});
    report.checks.push_back(std::move(weight));

    ValidationCheck dimension{checks::antipodal_dimension, true, {},
                              "r + n_j <= 2n for every antipodal summand"};
    for (const auto& [key, mult] : m.antipodal())
        if (key.r + key.n > 2 * n) dimension.offending.push_back({key.r, key.n});
    report.checks.push_back(std::move(dimension));

    if (has_fixed_point) {
        ValidationCheck positive{checks::antipodal_positive_shift, true, {},
                                 "r > 0 for every antipodal summand"};
        ValidationCheck strict{checks::antipodal_strict_dimension, true, {},
                               "r + n_j < 2n for every antipodal summand"};
        for (const auto& [key, mult] : m.antipodal()) {
            if (key.r <= 0) positive.offending.push_back({key.r, key.n});
            if (key.r + key.n >= 2 * n) strict.offending.push_back({key.r, key.n});
        }
        report.checks.push_back(std::move(positive));
        report.checks.push_back(std::move(strict));

        if (connected) {
            ValidationCheck base{checks::base_point_summand, true, {},
                                 "exactly one M2 summand at (0,0)"};
            if (m.rank(0, 0) != 1) base.offending.push_back({0, 0});
            report.checks.push_back(std::move(base));
        }
    }

    if (connected) {
        const int b0 = underlying_singular(m).dim(0);
        ValidationCheck conn{checks::connectivity, true, {},
                             "connected flag requires b_0 = 1, found " + std::to_string(b0)};
        if (b0 != 1) conn.offending.push_back({0, b0});
        report.checks.push_back(std::move(conn));
    }

    report.pd = pd_symmetric(m, n);
    ValidationCheck pd{checks::pd_symmetry, true, {}, "Rk and Rk_a mirror-symmetric"};
    for (const auto& v : report.pd.violations) pd.offending.push_back(v.key);
    report.checks.push_back(std::move(pd));

    for (auto& c : report.checks) c.passed = c.offending.empty();
    return report;
}

}  // namespace bredon
