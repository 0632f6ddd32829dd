#include "bredon/json_io.hpp"

#include <algorithm>

namespace bredon {

using nlohmann::json;

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character.
        const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i < offset; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                        e.what());
    }
}

namespace {

Json pairs(const std::map<int, int>& entries) {
    Json out = Json::array();
    for (const auto& [d, c] : entries) out.push_back({d, c});
    return out;
}

Json key_pair(const std::pair<int, int>& k) { return Json::array({k.first, k.second}); }

[[noreturn]] void schema(const std::string& field, const std::string& problem) {
    throw Error(ErrorCode::SchemaError, "field '" + field + "': " + problem);
}

int as_int(const json& j, const std::string& field) {
    if (!j.is_number_integer()) schema(field, "expected an integer");
    return j.get<int>();
}

bool as_bool(const json& j, const std::string& field) {
    if (!j.is_boolean()) schema(field, "expected a boolean");
    return j.get<bool>();
}

const json& require(const json& obj, const std::string& field) {
    auto it = obj.find(field);
    if (it == obj.end()) schema(field, "missing");
    return *it;
}

std::vector<std::vector<int>> int_rows(const json& j, const std::string& field, std::size_t width) {
    if (!j.is_array()) schema(field, "expected an array");
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = field + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != width)
            schema(where, "expected an array of " + std::to_string(width) + " integers");
        std::vector<int> row;
        for (std::size_t k = 0; k < width; ++k) row.push_back(as_int(j[i][k], where));
        rows.push_back(std::move(row));
    }
    return rows;
}

GradedDims dense_dims(const json& j, const std::string& field) {
    if (!j.is_array()) schema(field, "expected an array of integers");
    GradedDims out;
    for (std::size_t d = 0; d < j.size(); ++d) {
        const int b = as_int(j[d], field + "[" + std::to_string(d) + "]");
        if (b < 0) schema(field + "[" + std::to_string(d) + "]", "must be >= 0");
        out.add(static_cast<int>(d), b);
    }
    return out;
}

Json dense(const GradedDims& d) {
    Json out = Json::array();
    if (d.empty()) return out;
    const int top = d.entries().rbegin()->first;
    for (int k = 0; k <= top; ++k) out.push_back(d.at(k));
    return out;
}

}  // namespace

Json to_json(const NormalFormModule& m) {
    Json free = Json::array();
    for (const auto& [key, mult] : m.free()) free.push_back({key.p, key.q, mult});
    Json antipodal = Json::array();
    for (const auto& [key, mult] : m.antipodal()) antipodal.push_back({key.r, key.n, mult});
    Json out;
    out["free"] = std::move(free);
    out["antipodal"] = std::move(antipodal);
    return out;
}

Json to_json(const GradedDims& d) { return pairs(d.entries()); }

Json to_json(const C2GradedSpace& s) {
    Json out;
    out["trivial"] = pairs(s.trivial.entries());
    out["regular"] = pairs(s.regular.entries());
    return out;
}

Json to_json(const BorelModule& b) {
    Json free = Json::array();
    for (const auto& [p, c] : b.free) free.push_back({p, c});
    Json torsion = Json::array();
    for (const auto& [key, c] : b.torsion) torsion.push_back({key.first, key.second, c});
    Json out;
    out["free"] = std::move(free);
    out["torsion"] = std::move(torsion);
    return out;
}

Json to_json(const HomologyModule& h) {
    Json out = to_json(h.module);
    out["opposite"] = h.opposite;
    return out;
}

Json to_json(const UnivariatePolynomial& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({e, c});
    return out;
}

Json to_json(const BivariatePolynomial& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({e.first, e.second, c});
    return out;
}

Json to_json(const SmithThomReport& r) {
    Json out;
    out["fixed"] = r.fixed_total;
    out["group_cohomology"] = r.group_cohomology_total;
    out["singular"] = r.singular_total;
    out["class"] = std::string(to_string(r.maximality));
    return out;
}

Json to_json(const PdResult& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        Json item;
        item["kind"] = v.kind == PdViolation::Kind::Free ? "free" : "antipodal";
        item["key"] = key_pair(v.key);
        item["mirror"] = key_pair(v.mirror);
        item["count"] = v.count;
        item["mirror_count"] = v.mirror_count;
        violations.push_back(std::move(item));
    }
    Json out;
    out["holds"] = r.holds;
    out["violations"] = std::move(violations);
    return out;
}

Json to_json(const ValidationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json item;
        item["name"] = c.name;
        item["passed"] = c.passed;
        Json offending = Json::array();
        for (const auto& k : c.offending) offending.push_back(key_pair(k));
        item["offending"] = std::move(offending);
        item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    Json out;
    out["passed"] = r.passed();
    out["checks"] = std::move(checks);
    out["pd"] = to_json(r.pd);
    return out;
}

Json to_json(const Prediction& p) {
    Json out;
    out["applicable"] = p.applicable;
    out["prediction"] = p.prediction ? Json(std::string(to_string(*p.prediction))) : Json(nullptr);
    return out;
}

Json to_json(const ConstraintSet& c) {
    Json out;
    out["n"] = c.dimension;
    out["betti_total"] = dense(c.betti_total);
    out["betti_fixed"] = c.betti_fixed ? dense(*c.betti_fixed) : Json(nullptr);
    out["has_fixed_point"] = c.has_fixed_point;
    out["connected"] = c.connected;
    out["poincare_dual"] = c.poincare_dual;
    if (c.forgetful_onto_degrees) {
        Json degrees = Json::array();
        for (int d : *c.forgetful_onto_degrees) degrees.push_back(d);
        out["forgetful_onto_degrees"] = std::move(degrees);
    } else {
        out["forgetful_onto_degrees"] = nullptr;
    }
    out["class_filter"] =
        c.class_filter ? Json(std::string(to_string(*c.class_filter))) : Json(nullptr);
    return out;
}

Json to_json(const CatalogEntry& e) {
    Json params = Json::object();
    for (const auto& [k, v] : e.parameters) params[k] = v;
    Json md;
    md["dimension"] = e.metadata.dimension;
    md["has_fixed_point"] = e.metadata.has_fixed_point;
    md["connected"] = e.metadata.connected;
    md["expected_class"] = std::string(to_string(e.metadata.expected_class));
    md["is_real_manifold"] = e.metadata.is_real_manifold;
    md["hodge_polynomial"] =
        e.metadata.hodge_polynomial ? to_json(*e.metadata.hodge_polynomial) : Json(nullptr);
    md["notes"] = e.metadata.notes;
    Json out;
    out["name"] = e.name;
    out["parameters"] = std::move(params);
    out["module"] = to_json(e.module);
    out["metadata"] = std::move(md);
    return out;
}

Json catalog_list_json() {
    Json out = Json::array();
    for (const auto& family : catalog_list()) {
        Json params = Json::array();
        for (const auto& spec : family.parameters) {
            Json p;
            p["name"] = spec.name;
            p["type"] = "integer";
            p["min"] = spec.min;
            p["max"] = spec.max ? Json(*spec.max) : Json(nullptr);
            p["description"] = spec.description;
            params.push_back(std::move(p));
        }
        Json item;
        item["name"] = family.name;
        item["parameters"] = std::move(params);
        item["description"] = family.description;
        out.push_back(std::move(item));
    }
    return out;
}

std::string to_canonical_string(const NormalFormModule& m) { return to_json(m).dump(); }

NormalFormModule module_from_json(const json& j, bool cw_flag) {
    if (!j.is_object()) schema("<root>", "expected an object with 'free' and 'antipodal'");
    for (const auto& [key, value] : j.items())
        if (key != "free" && key != "antipodal") schema(key, "unknown field");
    std::vector<FreeSummand> free;
    std::vector<AntipodalSummand> antipodal;
    if (auto it = j.find("free"); it != j.end())
        for (const auto& row : int_rows(*it, "free", 3)) free.push_back({row[0], row[1], row[2]});
    if (auto it = j.find("antipodal"); it != j.end())
        for (const auto& row : int_rows(*it, "antipodal", 3))
            antipodal.push_back({row[0], row[1], row[2]});
    return make_module(free, antipodal, cw_flag);
}

ConstraintSet constraints_from_json(const json& j) {
    if (!j.is_object()) schema("<root>", "expected an object");
    static const std::vector<std::string> known = {
        "n", "betti_total", "betti_fixed", "has_fixed_point", "connected",
        "poincare_dual", "forgetful_onto_degrees", "class_filter"};
    for (const auto& [key, value] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end()) schema(key, "unknown field");

    ConstraintSet c;
    c.dimension = as_int(require(j, "n"), "n");
    if (c.dimension < 0) schema("n", "must be >= 0");
    c.betti_total = dense_dims(require(j, "betti_total"), "betti_total");
    if (auto it = j.find("betti_fixed"); it != j.end() && !it->is_null())
        c.betti_fixed = dense_dims(*it, "betti_fixed");
    if (auto it = j.find("has_fixed_point"); it != j.end())
        c.has_fixed_point = as_bool(*it, "has_fixed_point");
    if (auto it = j.find("connected"); it != j.end()) c.connected = as_bool(*it, "connected");
    if (auto it = j.find("poincare_dual"); it != j.end())
        c.poincare_dual = as_bool(*it, "poincare_dual");
    if (auto it = j.find("forgetful_onto_degrees"); it != j.end() && !it->is_null()) {
        if (!it->is_array()) schema("forgetful_onto_degrees", "expected an array of integers");
        std::set<int> degrees;
        for (std::size_t i = 0; i < it->size(); ++i)
            degrees.insert(as_int((*it)[i], "forgetful_onto_degrees[" + std::to_string(i) + "]"));
        c.forgetful_onto_degrees = std::move(degrees);
    }
    if (auto it = j.find("class_filter"); it != j.end() && !it->is_null()) {
        if (!it->is_string()) schema("class_filter", "expected \"M\", \"GM\", \"NEITHER\" or null");
        auto cls = parse_maximality_class(it->get<std::string>());
        if (!cls) schema("class_filter", "expected \"M\", \"GM\", \"NEITHER\" or null");
        c.class_filter = *cls;
    }
    return c;
}

BivariatePolynomial bivariate_from_json(const json& j) {
    BivariatePolynomial out;
    for (const auto& row : int_rows(j, "hodge", 3)) {
        if (row[0] < 0 || row[1] < 0) schema("hodge", "exponents must be >= 0");
        out.add_term(row[0], row[1], row[2]);
    }
    return out;
}

NormalFormModule parse_module(std::string_view text, bool cw_flag) {
    return module_from_json(parse_json(text), cw_flag);
}

ConstraintSet parse_constraints(std::string_view text) {
    return constraints_from_json(parse_json(text));
}

}  // namespace bredon
