// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "bredon/catalog.hpp"
#include "bredon/classification.hpp"
#include "bredon/core.hpp"
#include "bredon/localization.hpp"
#include "bredon/solver.hpp"
#include "oracle/brute_force.hpp"
#include "oracle/direct_count.hpp"
#include "support/random_modules.hpp"

using namespace bredon;
using MC = MaximalityClass;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<Outcome()>& body) {
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d. %s%s%s\n", o.pass ? "PASS" : "FAIL", number, title.c_str(),
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
}

CatalogEntry get(const std::string& name, std::map<std::string, int> params = {}) {
    return catalog_get(name, params);
}

ConstraintSet k3_constraints() {
    ConstraintSet c;
    c.dimension = 2;
    c.betti_total = {{0, 1}, {2, 22}, {4, 1}};
    c.betti_fixed = GradedDims{{0, 2}, {2, 2}};
    c.has_fixed_point = c.connected = c.poincare_dual = true;
    return c;
}

ConstraintSet cubic_constraints(bool onto_at_4) {
    ConstraintSet c;
    c.dimension = 3;
    c.betti_total = {{0, 1}, {2, 1}, {3, 10}, {4, 1}, {6, 1}};
    c.betti_fixed = GradedDims{{0, 2}, {1, 1}, {2, 1}, {3, 2}};
    c.has_fixed_point = c.connected = c.poincare_dual = true;
    if (onto_at_4) c.forgetful_onto_degrees = std::set<int>{4};
    return c;
}

std::vector<NormalFormModule> random_corpus() {
    std::mt19937_64 rng(0xacce97);
    std::vector<NormalFormModule> corpus;
    for (int i = 0; i < 1200; ++i) corpus.push_back(testing_support::random_module(rng, 12, 5));
    return corpus;
}

// All basis elements with exponents <= 6.
std::vector<M2Element> ring_basis() {
    std::vector<M2Element> out;
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b) {
            out.push_back(M2Element::positive(a, b));
            out.push_back(M2Element::negative(a, b));
        }
    return out;
}

// Independent model of M2: an element is rho^x tau^y, possibly times theta,
// with negative exponents only on theta multiples. Theta kills rho, tau, theta.
struct Monomial {
    bool zero = false;
    bool theta = false;
    int x = 0;
    int y = 0;
};

Monomial model(const M2Element& e) {
    if (e.is_zero()) return {true, false, 0, 0};
    if (e.kind() == M2Element::Kind::Positive) return {false, false, e.rho_part(), e.tau_part()};
    return {false, true, -e.rho_part(), -e.tau_part()};
}

Monomial model_product(const Monomial& u, const Monomial& v) {
    if (u.zero || v.zero || (u.theta && v.theta)) return {true, false, 0, 0};
    const Monomial w{false, u.theta || v.theta, u.x + v.x, u.y + v.y};
    if (w.theta && (w.x > 0 || w.y > 0)) return {true, false, 0, 0};
    return w;
}

bool same(const Monomial& u, const Monomial& v) {
    if (u.zero || v.zero) return u.zero == v.zero;
    return u.theta == v.theta && u.x == v.x && u.y == v.y;
}

std::vector<ConstraintSet> theorem_profiles(int n, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ConstraintSet> out;
    while (static_cast<int>(out.size()) < count) {
        ConstraintSet c;
        const bool from_module = out.size() % 2 == 0;
        if (from_module) {
            // Profile of a random Poincare-symmetric module with b_1 = 0.
            const int components = testing_support::uniform(rng, 1, 2);
            const auto m = testing_support::random_pd_module(rng, n, components, {1, 2 * n - 1}, 3);
            c = testing_support::constraints_of(m, n, true, true);
        } else {
            // A random symmetric Betti profile with b_1 = 0, often infeasible.
            c.dimension = n;
            const int b0 = testing_support::uniform(rng, 1, 2);
            c.betti_total.add(0, b0);
            c.betti_total.add(2 * n, b0);
            for (int d = 2; d <= n; ++d) {
                const int b = testing_support::uniform(rng, 0, d == n ? 14 : 4);
                c.betti_total.add(d, b);
                if (d != n) c.betti_total.add(2 * n - d, b);
            }
            GradedDims fixed;
            for (int d = 0; d <= n - d; ++d) {
                const int f = testing_support::uniform(rng, d == 0 ? 1 : 0, 4);
                fixed.add(d, f);
                if (d != n - d) fixed.add(n - d, f);
            }
            c.betti_fixed = fixed;
            c.has_fixed_point = c.poincare_dual = true;
            c.connected = b0 == 1;
        }
        if (n == 3) c.forgetful_onto_degrees = std::set<int>{4};
        out.push_back(c);
    }
    return out;
}

Outcome theorem_check(int n, const std::function<Prediction(const ConstraintSet&)>& predict,
                      std::uint64_t seed) {
    Outcome o;
    int applicable = 0;
    int solved = 0;
    int modules = 0;
    for (const auto& c : theorem_profiles(n, 240, seed)) {
        const Prediction p = predict(c);
        if (!p.applicable) continue;
        ++applicable;
        const auto solutions = enumerate_decompositions(c, {4});
        if (!solutions.empty()) ++solved;
        for (const auto& m : solutions) {
            ++modules;
            o.require(p.admits(classify(m)), "counterexample " + m.to_string());
        }
    }
    o.require(applicable >= 200, "only " + std::to_string(applicable) + " applicable sets");
    if (o.pass)
        o.detail = std::to_string(applicable) + " sets, " + std::to_string(solved) + " feasible, " +
                   std::to_string(modules) + " modules, 0 counterexamples";
    return o;
}

}  // namespace

int main() {
    criterion(1, "catalog classification table", [] {
        Outcome o;
        for (int n = 0; n <= 6; ++n)
            o.require(classify(get("projective_space", {{"n", n}}).module) == MC::Maximal,
                      "P^" + std::to_string(n));
        o.require(classify(get("elliptic_curve").module) == MC::Maximal, "elliptic curve");
        for (int g = 0; g <= 6; ++g)
            for (int r = 0; r <= g; ++r)
                o.require(classify(get("curve", {{"g", g}, {"r", r}}).module) ==
                              (r == g ? MC::Maximal : MC::GaloisMaximalOnly),
                          "curve g=" + std::to_string(g) + " r=" + std::to_string(r));
        o.require(classify(get("severi_brauer_1").module) == MC::Neither, "SB(1)");
        for (int k = 0; k <= 3; ++k)
            o.require(classify(get("severi_brauer_odd", {{"k", k}}).module) == MC::Neither,
                      "SB k=" + std::to_string(k));
        for (const auto& [b, chi] : k3_moduli_lattice())
            o.require(classify(get("k3", {{"b_star", b}, {"chi", chi}}).module) ==
                          (b == 24 ? MC::Maximal : MC::GaloisMaximalOnly),
                      "k3 " + std::to_string(b) + "," + std::to_string(chi));
        o.require(classify(get("cubic_threefold_s3_rp3").module) == MC::GaloisMaximalOnly, "cubic");
        return o;
    });

    criterion(2, "Smith-Thom ledgers", [] {
        Outcome o;
        const auto k3 = smith_thom_report(get("k3", {{"b_star", 4}, {"chi", 4}}).module);
        o.require(k3.fixed_total == 4 && k3.group_cohomology_total == 4 && k3.singular_total == 24,
                  "k3(4,4)");
        const auto sb = smith_thom_report(get("severi_brauer_1").module);
        o.require(sb.fixed_total == 0 && sb.group_cohomology_total == 2 && sb.singular_total == 2,
                  "SB(1)");
        if (o.pass) o.detail = "k3(4,4) = (4, 4, 24), SB(1) = (0, 2, 2)";
        return o;
    });

    criterion(3, "fixed-point Betti reproduction", [] {
        Outcome o;
        for (const auto& [b, chi] : k3_moduli_lattice()) {
            const auto poly = fixed_poincare_polynomial(get("k3", {{"b_star", b}, {"chi", chi}}).module);
            o.require(poly.evaluate(1) == b && poly.evaluate(-1) == chi,
                      "k3 " + std::to_string(b) + "," + std::to_string(chi));
        }
        o.require(fixed_poincare_polynomial(get("projective_space", {{"n", 2}}).module) ==
                      UnivariatePolynomial{{0, 1}, {1, 1}, {2, 1}},
                  "P^2");
        for (int g = 0; g <= 6; ++g)
            for (int r = 0; r <= g; ++r)
                o.require(fixed_poincare_polynomial(get("curve", {{"g", g}, {"r", r}}).module) ==
                              UnivariatePolynomial{{0, r + 1}, {1, r + 1}},
                          "curve g=" + std::to_string(g) + " r=" + std::to_string(r));
        if (o.pass) o.detail = std::to_string(k3_moduli_lattice().size()) + " K3 lattice points";
        return o;
    });

    const auto corpus = random_corpus();

    criterion(4, "fixed-locus identity P(t) = R(t, 1/t) on random modules", [&] {
        Outcome o;
        int mismatches = 0;
        for (const auto& m : corpus) {
            const auto counted = oracle::without_zeros(oracle::fixed_betti(m));
            std::map<int, int> substituted;
            const UnivariatePolynomial poly = fixed_poincare_polynomial(m);
            for (const auto& [e, c] : poly.terms()) substituted[e] = static_cast<int>(c);
            if (substituted != counted || rho_localize(m).entries() != counted) ++mismatches;
        }
        o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
        if (o.pass) o.detail = std::to_string(corpus.size()) + " modules, 0 mismatches";
        return o;
    });

    criterion(5, "Borel classification agrees on random modules", [&] {
        Outcome o;
        int mismatches = 0;
        for (const auto& m : corpus) {
            const MC direct = classify(m);
            if (borel_classify(tau_localize(m)) != direct ||
                oracle::class_from_totals(oracle::totals(m)) != direct)
                ++mismatches;
        }
        o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
        if (o.pass) o.detail = std::to_string(corpus.size()) + " modules, 0 mismatches";
        return o;
    });

    criterion(6, "Smith-Thom chain fixed <= groupcoh <= singular", [&] {
        Outcome o;
        int violations = 0;
        for (const auto& m : corpus) {
            const auto st = smith_thom_report(m);
            const auto t = oracle::totals(m);
            if (!(st.fixed_total <= st.group_cohomology_total &&
                  st.group_cohomology_total <= st.singular_total) ||
                st.fixed_total != t.fixed() || st.group_cohomology_total != t.group_cohomology() ||
                st.singular_total != t.singular())
                ++violations;
        }
        o.require(violations == 0, std::to_string(violations) + " violations");
        if (o.pass) o.detail = std::to_string(corpus.size()) + " modules, 0 violations";
        return o;
    });

    criterion(7, "Poincare duality symmetry of catalog entries", [] {
        Outcome o;
        std::vector<CatalogEntry> entries;
        for (const char* name : {"point", "elliptic_curve", "severi_brauer_1", "twisted_plane",
                                 "k3_hodge_expressive", "cubic_threefold_s3_rp3"})
            entries.push_back(get(name));
        for (int n = 0; n <= 6; ++n) entries.push_back(get("projective_space", {{"n", n}}));
        for (int k = 0; k <= 3; ++k) entries.push_back(get("severi_brauer_odd", {{"k", k}}));
        for (int g = 0; g <= 6; ++g)
            for (int r = 0; r <= g; ++r) entries.push_back(get("curve", {{"g", g}, {"r", r}}));
        for (int p = 0; p <= 8; ++p)
            for (int q = 0; q <= p; ++q) entries.push_back(get("representation_sphere", {{"p", p}, {"q", q}}));
        for (const auto& [b, chi] : k3_moduli_lattice()) entries.push_back(get("k3", {{"b_star", b}, {"chi", chi}}));
        int checked = 0;
        for (const auto& e : entries) {
            if (!e.metadata.is_real_manifold) continue;
            ++checked;
            o.require(pd_symmetric(e.module, e.metadata.dimension).holds, e.name);
        }
        const PdResult twisted = pd_symmetric(get("twisted_plane").module, 1);
        o.require(!twisted.holds && twisted.violations.size() == 1 &&
                      twisted.violations[0].key == std::pair{1, 1} &&
                      twisted.violations[0].mirror == std::pair{1, 0},
                  "twisted plane violation set");
        if (o.pass)
            o.detail = std::to_string(checked) + " Real-manifold entries symmetric; twisted plane (1,1) vs (1,0)";
        return o;
    });

    criterion(8, "solver uniqueness for the K3 profile", [] {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        const auto solutions = enumerate_decompositions(k3_constraints());
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(solutions.size() == 1, std::to_string(solutions.size()) + " solutions");
        o.require(!solutions.empty() && solutions[0] == get("k3", {{"b_star", 4}, {"chi", 4}}).module,
                  "solution differs from k3(4,4)");
        o.require(seconds < 60.0, "took " + std::to_string(seconds) + " s");
        if (o.pass) {
            std::ostringstream d;
            d << "1 solution = k3(4,4) in " << seconds << " s";
            o.detail = d.str();
        }
        return o;
    });

    criterion(9, "solver uniqueness for the cubic threefold profile", [] {
        Outcome o;
        const auto cubic = get("cubic_threefold_s3_rp3").module;
        const auto with_onto = enumerate_decompositions(cubic_constraints(true));
        const auto without = enumerate_decompositions(cubic_constraints(false));
        const auto naive_with = oracle::brute_force(cubic_constraints(true));
        const auto naive_without = oracle::brute_force(cubic_constraints(false));
        bool has_neither = false;
        for (const auto& m : without) has_neither = has_neither || classify(m) == MC::Neither;
        int with_hyperplane = 0;
        for (const auto& m : with_onto) with_hyperplane += m.rank(2, 1) > 0 && m == cubic;

        const std::string counts =
            std::to_string(with_onto.size()) + " solutions with onto at 4 (brute force " +
            std::to_string(naive_with.size()) + "), " + std::to_string(without.size()) +
            " without (brute force " + std::to_string(naive_without.size()) + ")";
        o.require(naive_with == std::set<NormalFormModule>(with_onto.begin(), with_onto.end()) &&
                      naive_without == std::set<NormalFormModule>(without.begin(), without.end()),
                  "brute force disagrees: " + counts);
        o.require(without.size() >= 2 && has_neither, "no NEITHER solution without onto: " + counts);
        o.require(with_onto.size() == 1 && with_onto[0] == cubic,
                  counts + "; the cubic's module is among them and is the only one with a "
                           "Sigma^{2,1} summand (" + std::to_string(with_hyperplane) + ")");
        if (o.pass) o.detail = counts;
        return o;
    });

    criterion(10, "surface and threefold GM predictions on random profiles", [] {
        Outcome surfaces = theorem_check(2, krasnov_predict, 0x5a);
        Outcome threefolds = theorem_check(3, threefold_predict, 0x3f);
        Outcome o;
        o.require(surfaces.pass, "surfaces: " + surfaces.detail);
        o.require(threefolds.pass, "threefolds: " + threefolds.detail);
        if (o.pass) o.detail = "surfaces: " + surfaces.detail + "; threefolds: " + threefolds.detail;
        return o;
    });

    criterion(11, "Hodge expressivity", [] {
        Outcome o;
        const BivariatePolynomial k3_hodge{{{0, 0}, 1}, {{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 20}, {{2, 2}, 1}};
        const auto he = get("k3_hodge_expressive").module;
        o.require(hodge_expressive_check(he, k3_hodge, true), "HE K3 not expressive");
        o.require(!hodge_expressive_check(get("k3", {{"b_star", 4}, {"chi", 4}}).module, k3_hodge, true),
                  "k3(4,4) expressive");
        o.require(hodge_birank_check(he, k3_hodge), "HE K3 birank");
        for (int n = 0; n <= 4; ++n) {
            BivariatePolynomial diagonal;
            for (int i = 0; i <= n; ++i) diagonal.add_term(i, i, 1);
            o.require(hodge_birank_check(get("projective_space", {{"n", n}}).module, diagonal),
                      "P^" + std::to_string(n) + " birank");
        }
        return o;
    });

    criterion(12, "M2 multiplication table", [] {
        Outcome o;
        const auto basis = ring_basis();
        long products = 0;
        for (const auto& x : basis)
            for (const auto& y : basis) {
                const M2Element xy = x * y;
                ++products;
                o.require(xy == y * x, "not commutative at " + x.to_string() + ", " + y.to_string());
                o.require(same(model(xy), model_product(model(x), model(y))),
                          "product mismatch at " + x.to_string() + ", " + y.to_string());
                if (!xy.is_zero()) {
                    const Bidegree bx = x.bidegree(), by = y.bidegree(), bxy = xy.bidegree();
                    o.require(bxy.p == bx.p + by.p && bxy.q == bx.q + by.q, "bidegree not additive");
                }
                if (x.kind() == M2Element::Kind::Negative && y.kind() == M2Element::Kind::Positive)
                    o.require(!xy.is_zero() == (y.rho_part() <= x.rho_part() && y.tau_part() <= x.tau_part()),
                              "divisibility at " + x.to_string() + ", " + y.to_string());
                for (const auto& z : basis) o.require((x * y) * z == x * (y * z), "not associative");
            }
        const auto theta = M2Element::theta();
        o.require((M2Element::rho() * theta).is_zero() && (M2Element::tau() * theta).is_zero() &&
                      (theta * theta).is_zero(),
                  "theta relations");
        if (o.pass)
            o.detail = std::to_string(basis.size()) + " basis elements, " + std::to_string(products) +
                       " products, " + std::to_string(products * basis.size()) + " triples";
        return o;
    });

    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
