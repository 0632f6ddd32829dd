#include "bredon/catalog.hpp"

#include <algorithm>

namespace bredon {

namespace {

BivariatePolynomial projective_hodge(int n) {
    BivariatePolynomial h;
    for (int i = 0; i <= n; ++i) h.add_term(i, i, 1);
    return h;
}

BivariatePolynomial k3_hodge() {
    return BivariatePolynomial{{{0, 0}, 1}, {{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 20}, {{2, 2}, 1}};
}

class Params {
public:
    Params(const std::string& family, const std::map<std::string, int>& given)
        : family_(family), given_(given) {
        const auto& families = catalog_list();
        auto it = std::find_if(families.begin(), families.end(),
                               [&](const CatalogFamily& f) { return f.name == family; });
        if (it == families.end()) throw Error(ErrorCode::UnknownName, "no catalog entry '" + family + "'");
        specs_ = &it->parameters;
        for (const auto& [key, value] : given) {
            auto spec = std::find_if(specs_->begin(), specs_->end(),
                                     [&](const ParameterSpec& s) { return s.name == key; });
            if (spec == specs_->end())
                throw Error(ErrorCode::ParameterRange,
                            family + " takes no parameter '" + key + "'");
            if (value < spec->min || (spec->max && value > *spec->max))
                throw Error(ErrorCode::ParameterRange,
                            family + ": " + key + "=" + std::to_string(value) + " out of range");
        }
        for (const auto& spec : *specs_)
            if (!given.count(spec.name))
                throw Error(ErrorCode::ParameterRange,
                            family + " requires parameter '" + spec.name + "'");
    }

    int operator[](const std::string& key) const { return given_.at(key); }

private:
    std::string family_;
    const std::map<std::string, int>& given_;
    const std::vector<ParameterSpec>* specs_ = nullptr;
};

CatalogEntry k3_entry(int b_star, int chi, const std::string& name,
                      std::map<std::string, int> parameters) {
    if ((b_star + chi) % 4 != 0 || (b_star - chi) % 2 != 0 || (24 - b_star) % 2 != 0)
        throw Error(ErrorCode::ParameterRange,
                    "k3: (b_star, chi) = (" + std::to_string(b_star) + ", " + std::to_string(chi) +
                        ") gives non-integral multiplicities");
    const int a = (b_star + chi) / 4 - 1;
    const int b = (b_star - chi) / 2;
    const int c = (24 - b_star) / 2;
    if (a < 0 || b < 0 || c < 0)
        throw Error(ErrorCode::ParameterRange,
                    "k3: (b_star, chi) = (" + std::to_string(b_star) + ", " + std::to_string(chi) +
                        ") gives negative multiplicities");

    NormalFormModule::FreeMap free{{{0, 0}, 1}, {{2, 0}, a}, {{2, 1}, b}, {{2, 2}, a}, {{4, 2}, 1}};
    NormalFormModule::AntipodalMap antipodal{{{2, 0}, c}};

    CatalogEntry e;
    e.name = name;
    e.parameters = std::move(parameters);
    e.module = make_module(free, antipodal);
    e.metadata.dimension = 2;
    e.metadata.has_fixed_point = true;
    e.metadata.expected_class = c == 0 ? MaximalityClass::Maximal : MaximalityClass::GaloisMaximalOnly;
    e.metadata.hodge_polynomial = k3_hodge();
    e.metadata.notes = "real K3 surface; b_0 of the real part is " + std::to_string(a + 1) +
                       ", b_1 is " + std::to_string(b);
    return e;
}

}  // namespace

const std::vector<CatalogFamily>& catalog_list() {
    static const std::vector<CatalogFamily> families = {
        {"point", {}, "a fixed point"},
        {"representation_sphere",
         {{"p", 0, std::nullopt, "topological dimension"},
          {"q", 0, std::nullopt, "weight, 0 <= q <= p"}},
         "representation sphere S^{p,q}"},
        {"projective_space", {{"n", 0, std::nullopt, "complex dimension"}}, "P^n(C) with conjugation"},
        {"elliptic_curve", {}, "C / (Z + iZ) with conjugation"},
        {"curve",
         {{"g", 0, std::nullopt, "genus"}, {"r", 0, std::nullopt, "number of ovals minus one, r <= g"}},
         "real curve of genus g with r+1 ovals"},
        {"severi_brauer_1", {}, "the conic x^2 + y^2 + z^2 = 0"},
        {"severi_brauer_odd", {{"k", 0, std::nullopt, "dimension is 2k+1"}},
         "Severi-Brauer variety of dimension 2k+1 without real points"},
        {"twisted_plane", {}, "RP^2 with the rotation by 180 degrees"},
        {"k3",
         {{"b_star", 2, 24, "total Betti number of the real part"},
          {"chi", -18, 20, "Euler characteristic of the real part"}},
         "real K3 surface"},
        {"k3_hodge_expressive", {}, "Hodge-expressive real K3 surface, k3(24, -16)"},
        {"cubic_threefold_s3_rp3", {}, "real cubic threefold with real part S^3 + RP^3"},
    };
    return families;
}

const std::vector<std::pair<int, int>>& k3_moduli_lattice() {
    static const std::vector<std::pair<int, int>> points = [] {
        std::vector<std::pair<int, int>> out;
        // Rows b_* = 2, 4, ..., 20: chi runs from b_* down in steps of 4, one
        // more point per row.
        for (int b = 2; b <= 20; b += 2)
            for (int k = 0; k < b / 2; ++k) out.emplace_back(b, b - 4 * k);
        for (int chi : {18, 14, 2, -2, -14, -18}) out.emplace_back(22, chi);
        for (int chi : {16, 0, -16}) out.emplace_back(24, chi);
        return out;
    }();
    return points;
}

CatalogEntry catalog_get(const std::string& name, const std::map<std::string, int>& parameters) {
    const Params params(name, parameters);
    CatalogEntry e;
    e.name = name;
    e.parameters = parameters;
    auto& md = e.metadata;

    if (name == "point") {
        e.module = make_module({{0, 0, 1}});
        md.dimension = 0;
        md.has_fixed_point = true;
        md.hodge_polynomial = projective_hodge(0);
        md.notes = "cohomology of a point is M2";
    } else if (name == "representation_sphere") {
        const int p = params["p"];
        const int q = params["q"];
        if (q > p) throw Error(ErrorCode::ParameterRange, "representation_sphere needs q <= p");
        e.module = make_module({{0, 0, 1}, {p, q, 1}});
        md.is_real_manifold = p == 2 * q;
        md.dimension = md.is_real_manifold ? q : (p + 1) / 2;
        md.has_fixed_point = true;
        md.connected = p > 0;
        md.notes = "reduced cohomology S^{p,q}M2 plus the base point";
    } else if (name == "projective_space") {
        const int n = params["n"];
        NormalFormModule::FreeMap free;
        for (int i = 0; i <= n; ++i) free[{2 * i, i}] = 1;
        e.module = make_module(free, {});
        md.dimension = n;
        md.has_fixed_point = true;
        md.hodge_polynomial = projective_hodge(n);
    } else if (name == "elliptic_curve") {
        e.module = make_module({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {2, 1, 1}});
        md.dimension = 1;
        md.has_fixed_point = true;
        md.hodge_polynomial = BivariatePolynomial{{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}};
        md.notes = "S^{1,0} x S^{1,1}";
    } else if (name == "curve") {
        const int g = params["g"];
        const int r = params["r"];
        if (r > g) throw Error(ErrorCode::ParameterRange, "curve needs r <= g");
        NormalFormModule::FreeMap free{{{0, 0}, 1}, {{1, 0}, r}, {{1, 1}, r}, {{2, 1}, 1}};
        NormalFormModule::AntipodalMap antipodal{{{1, 0}, g - r}};
        e.module = make_module(free, antipodal);
        md.dimension = 1;
        md.has_fixed_point = true;
        md.expected_class = r == g ? MaximalityClass::Maximal : MaximalityClass::GaloisMaximalOnly;
        md.hodge_polynomial =
            BivariatePolynomial{{{0, 0}, 1}, {{1, 0}, g}, {{0, 1}, g}, {{1, 1}, 1}};
        md.notes = "real curve with r+1 ovals";
    } else if (name == "severi_brauer_1" || name == "severi_brauer_odd") {
        const int k = name == "severi_brauer_1" ? 0 : params["k"];
        NormalFormModule::AntipodalMap antipodal;
        for (int i = 0; i <= k; ++i) antipodal[{4 * i, 2}] = 1;
        e.module = make_module({}, antipodal);
        md.dimension = 2 * k + 1;
        md.has_fixed_point = false;
        md.expected_class = MaximalityClass::Neither;
        md.hodge_polynomial = projective_hodge(2 * k + 1);
        md.notes = "no real points; C-points form P^{2k+1}";
    } else if (name == "twisted_plane") {
        e.module = make_module({{0, 0, 1}, {1, 1, 1}, {2, 1, 1}});
        md.dimension = 1;
        md.has_fixed_point = true;
        md.is_real_manifold = false;
        md.notes = "not a Real manifold: S^{1,1}M2 has no S^{1,0}M2 partner";
    } else if (name == "k3") {
        e = k3_entry(params["b_star"], params["chi"], name, parameters);
    } else if (name == "k3_hodge_expressive") {
        e = k3_entry(24, -16, name, parameters);
        e.metadata.notes = "Hodge-expressive K3 surface: P(t) = 2 + 20t + 2t^2";
    } else if (name == "cubic_threefold_s3_rp3") {
        e.module = make_module({{0, 0, 1}, {2, 1, 1}, {3, 0, 1}, {3, 3, 1}, {4, 2, 1}, {6, 3, 1}},
                               {{3, 0, 4}});
        md.dimension = 3;
        md.has_fixed_point = true;
        md.expected_class = MaximalityClass::GaloisMaximalOnly;
        // Stored exactly as commonly quoted for real cubics; its degree-3 total
        // is 12 whereas b_3 of the complex points is 10, which is what the
        // module realizes.
        md.hodge_polynomial = BivariatePolynomial{{{0, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 5},
                                                  {{1, 2}, 5}, {{2, 2}, 1}, {{3, 0}, 1},
                                                  {{0, 3}, 1}};
        md.notes = "b_3 = 10; the stored Hodge polynomial is suspect in degree 3";
    }
    return e;
}

}  // namespace bredon
