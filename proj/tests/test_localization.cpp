#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bredon/catalog.hpp"
#include "bredon/localization.hpp"
#include "oracle/direct_count.hpp"
#include "support/random_modules.hpp"

using namespace bredon;

namespace {

std::map<int, int> entries(const GradedDims& d) { return d.entries(); }

NormalFormModule k3_two_spheres() { return catalog_get("k3", {{"b_star", 4}, {"chi", 4}}).module; }

}  // namespace

TEST_CASE("rho localization") {
    CHECK(rho_localize(make_module({{5, 2, 1}})) == GradedDims{{3, 1}});
    CHECK(rho_localize(make_module({}, {{0, 2, 1}})).empty());
    CHECK(rho_localize(k3_two_spheres()) == GradedDims{{0, 2}, {2, 2}});
}

TEST_CASE("fixed-locus Poincare polynomial") {
    CHECK(fixed_poincare_polynomial(catalog_get("projective_space", {{"n", 2}}).module) ==
          UnivariatePolynomial{{0, 1}, {1, 1}, {2, 1}});
    for (int g = 0; g <= 4; ++g)
        for (int r = 0; r <= g; ++r)
            CHECK(fixed_poincare_polynomial(catalog_get("curve", {{"g", g}, {"r", r}}).module) ==
                  UnivariatePolynomial{{0, r + 1}, {1, r + 1}});
    CHECK(fixed_poincare_polynomial(make_module({}, {{0, 2, 1}})).is_zero());
}

TEST_CASE("tau localization") {
    const BorelModule sphere = tau_localize(make_module({{3, 1, 1}}));
    CHECK(sphere.free == std::map<int, int>{{3, 1}});
    CHECK(sphere.torsion.empty());

    const BorelModule a2 = tau_localize(make_module({}, {{4, 2, 1}}));
    CHECK(a2.free.empty());
    CHECK(a2.torsion == std::map<std::pair<int, int>, int>{{{4, 2}, 1}});

    const BorelModule k3 = tau_localize(k3_two_spheres());
    CHECK(k3.free == std::map<int, int>{{0, 1}, {2, 2}, {4, 1}});
    CHECK(k3.torsion == std::map<std::pair<int, int>, int>{{{2, 0}, 10}});
}

TEST_CASE("underlying singular cohomology") {
    const C2GradedSpace a0 = underlying_singular(make_module({}, {{1, 0, 1}}));
    CHECK(a0.regular == GradedDims{{1, 1}});
    CHECK(a0.total_dim() == 2);

    const C2GradedSpace sb1 = underlying_singular(make_module({}, {{0, 2, 1}}));
    CHECK(sb1.trivial == GradedDims{{0, 1}, {2, 1}});
    CHECK(sb1.regular.empty());

    const C2GradedSpace torus = underlying_singular(catalog_get("elliptic_curve").module);
    CHECK(torus.dims() == GradedDims{{0, 1}, {1, 2}, {2, 1}});
    CHECK(torus.regular.empty());
}

TEST_CASE("forgetful image") {
    CHECK(forgetful_image_dims(make_module({{2, 1, 1}})) == GradedDims{{2, 1}});
    for (int g = 0; g <= 4; ++g)
        for (int r = 0; r <= g; ++r)
            CHECK(forgetful_image_dims(catalog_get("curve", {{"g", g}, {"r", r}}).module) ==
                  GradedDims{{0, 1}, {1, g + r}, {2, 1}});
    const auto p3 = catalog_get("projective_space", {{"n", 3}}).module;
    CHECK(forgetful_image_dims(p3) == underlying_singular(p3).dims());
}

TEST_CASE("homology duals") {
    const HomologyModule point = homology_dual(make_module({{0, 0, 1}}));
    CHECK(point.opposite);
    CHECK(point.module == make_module({{0, 0, 1}}));
    CHECK(homology_dual(make_module({}, {{2, 3, 1}})).module == make_module({}, {{5, 3, 1}}));
}

TEST_CASE("Poincare duality symmetry") {
    CHECK(pd_symmetric(k3_two_spheres(), 2).holds);
    CHECK(pd_symmetric(make_module({{0, 0, 1}}), 0).holds);

    const PdResult twisted = pd_symmetric(catalog_get("twisted_plane").module, 1);
    CHECK_FALSE(twisted.holds);
    REQUIRE(twisted.violations.size() == 1);
    CHECK(twisted.violations[0].key == std::pair{1, 1});
    CHECK(twisted.violations[0].mirror == std::pair{1, 0});
    CHECK(twisted.violations[0].count == 1);
    CHECK(twisted.violations[0].mirror_count == 0);

    CHECK(pd_mirror(FreeKey{1, 0}, 1) == FreeKey{1, 1});
    CHECK(pd_mirror(AntipodalKey{1, 0}, 2) == AntipodalKey{3, 0});
}

TEST_CASE("Real-manifold validation") {
    CHECK(real_manifold_validate(k3_two_spheres(), 2, true, true).passed());

    const auto with_free_orbit_at_zero = make_module({{0, 0, 1}, {2, 1, 1}}, {{0, 0, 1}, {2, 0, 1}});
    const ValidationReport r = real_manifold_validate(with_free_orbit_at_zero, 1, true, false);
    CHECK_FALSE(r.passed());
    REQUIRE(r.find(checks::antipodal_positive_shift));
    CHECK_FALSE(r.find(checks::antipodal_positive_shift)->passed);

    const ValidationReport heavy = real_manifold_validate(make_module({{2, 2, 1}}), 1, false, false);
    REQUIRE(heavy.find(checks::free_weight_bound));
    CHECK_FALSE(heavy.find(checks::free_weight_bound)->passed);
    CHECK(heavy.find(checks::free_weight_bound)->offending == std::vector<std::pair<int, int>>{{2, 2}});

    // b_0 = 2 cannot be connected.
    const auto two_points = make_module({{0, 0, 2}});
    const ValidationReport disconnected = real_manifold_validate(two_points, 0, true, true);
    REQUIRE(disconnected.find(checks::connectivity));
    CHECK_FALSE(disconnected.find(checks::connectivity)->passed);
}

TEST_CASE("localization properties over random modules") {
    std::mt19937_64 rng(20231);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto m = testing_support::random_module(rng);

        // Substitution path equals direct counting.
        const auto counted = oracle::fixed_betti(m);
        CHECK(fixed_poincare_polynomial(m) == rho_localize(m).to_polynomial());
        CHECK(entries(rho_localize(m)) == counted);

        const C2GradedSpace s = underlying_singular(m);
        CHECK(entries(s.dims()) == oracle::singular_betti(m));
        CHECK(s.total_dim() == m.free_count() + 2 * m.antipodal_count());

        const int p = testing_support::uniform(rng, 0, 5);
        const int q = testing_support::uniform(rng, 0, p);
        const auto sm = suspend(m, p, q);
        CHECK(rho_localize(sm) == rho_localize(m).shifted(p - q));
        CHECK(tau_localize(sm) == shifted(tau_localize(m), p));
        CHECK(underlying_singular(sm).dims() == s.dims().shifted(p));

        const GradedDims image = forgetful_image_dims(m);
        CHECK(entries(image) == oracle::forgetful_image(m));
        bool below = true;
        for (const auto& [d, c] : image.entries()) below = below && c <= s.dim(d);
        CHECK(below);
        CHECK((image == s.fixed_dims()) == (m.antipodal_positive_count() == 0));
    }
}

TEST_CASE("duality reproduces Poincare-symmetric modules") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = testing_support::uniform(rng, 1, 4);
        const auto m = testing_support::random_pd_module(rng, n, testing_support::uniform(rng, 1, 2), {});
        REQUIRE(pd_symmetric(m, n).holds);
        CHECK(poincare_reindex(homology_dual(m), n) == m);
    }
    CHECK(poincare_reindex(homology_dual(k3_two_spheres()), 2) == k3_two_spheres());
}
