#include "bredon/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bredon/catalog.hpp"
#include "bredon/classification.hpp"
#include "bredon/json_io.hpp"
#include "bredon/localization.hpp"
#include "bredon/solver.hpp"
#include "bredon/table.hpp"

namespace bredon::cli {

namespace {

const std::vector<std::string> kVerbs = {"catalog", "show",     "classify", "report",   "fixed",
                                         "borel",   "singular", "image",    "rankpoly", "pd-check",
                                         "validate", "hodge",   "solve",    "predict"};

struct Options {
    std::string verb;
    std::string catalog_name;
    std::vector<std::string> params;
    std::string module_path;
    std::string constraints_path;
    std::string hodge_path;
    std::optional<int> dim;
    std::string format = "table";
    bool json = false;
    bool fixed_point = false;
    bool connected = false;
    bool pd = false;
    bool torsion_free = false;
    unsigned jobs = 1;

    bool as_json() const { return json || format == "json"; }
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::map<std::string, int> parse_params(const std::vector<std::string>& raw) {
    std::map<std::string, int> out;
    for (const auto& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(ErrorCode::SchemaError, "--param '" + item + "' is not KEY=VALUE");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        std::size_t used = 0;
        int parsed = 0;
        try {
            parsed = std::stoi(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size())
            throw Error(ErrorCode::SchemaError, "--param " + key + ": '" + value + "' is not an integer");
        out[key] = parsed;
    }
    return out;
}

// A module from exactly one of --catalog / --module, plus the catalog entry
// when there is one (it supplies default metadata).
struct Input {
    NormalFormModule module;
    std::optional<CatalogEntry> entry;
};

Input load_module(const Options& o) {
    const bool from_catalog = !o.catalog_name.empty();
    const bool from_file = !o.module_path.empty();
    if (from_catalog == from_file)
        throw UsageError("'" + o.verb + "' needs exactly one of --catalog or --module");
    if (from_catalog) {
        CatalogEntry e = catalog_get(o.catalog_name, parse_params(o.params));
        NormalFormModule m = e.module;
        return {std::move(m), std::move(e)};
    }
    return {parse_module(read_file(o.module_path)), std::nullopt};
}

ConstraintSet load_constraints(const Options& o) {
    if (o.constraints_path.empty()) throw UsageError("'" + o.verb + "' needs --constraints FILE");
    if (!o.catalog_name.empty() || !o.module_path.empty())
        throw UsageError("'" + o.verb + "' takes --constraints only");
    ConstraintSet c = parse_constraints(read_file(o.constraints_path));
    c.has_fixed_point = c.has_fixed_point || o.fixed_point;
    c.connected = c.connected || o.connected;
    c.poincare_dual = c.poincare_dual || o.pd;
    return c;
}

int dimension_for(const Options& o, const Input& in) {
    if (o.dim) return *o.dim;
    if (in.entry) return in.entry->metadata.dimension;
    throw UsageError("'" + o.verb + "' needs --dim N for a module file");
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int run_verb(const Options& o, std::ostream& out, std::ostream& err) {
    const bool json = o.as_json();

    if (o.verb == "solve" || o.verb == "predict") {
        const ConstraintSet c = load_constraints(o);
        if (o.verb == "predict") {
            const Prediction k = krasnov_predict(c);
            const Prediction t = threefold_predict(c);
            if (json) {
                Json j;
                j["krasnov"] = to_json(k);
                j["threefold"] = to_json(t);
                emit(out, j);
            } else {
                out << table::prediction("krasnov", k) << table::prediction("threefold", t);
            }
            return 0;
        }
        const auto solutions = enumerate_decompositions(c, {o.jobs});
        for (const auto& m : solutions) out << to_canonical_string(m) << '\n';
        err << solutions.size() << " solution(s)\n";
        return 0;
    }

    if (o.verb == "catalog" && o.catalog_name.empty()) {
        if (!o.module_path.empty()) throw UsageError("'catalog' does not read --module");
        if (json) emit(out, catalog_list_json());
        else out << table::catalog(catalog_list());
        return 0;
    }

    const Input in = load_module(o);
    const NormalFormModule& m = in.module;

    if (o.verb == "catalog") {
        if (!in.entry) throw UsageError("'catalog' needs --catalog NAME");
        if (json) emit(out, to_json(*in.entry));
        else out << table::entry(*in.entry);
        return 0;
    }
    if (o.verb == "show") {
        if (json) emit(out, to_json(m));
        else out << table::lattice(m);
        return 0;
    }
    if (o.verb == "classify") {
        const MaximalityClass c = classify(m);
        if (json) {
            Json j;
            j["class"] = std::string(to_string(c));
            emit(out, j);
        } else {
            out << to_string(c) << '\n';
        }
        return 0;
    }
    if (o.verb == "fixed") {
        const GradedDims betti = rho_localize(m);
        const UnivariatePolynomial poly = fixed_poincare_polynomial(m);
        if (json) {
            Json j;
            j["betti"] = to_json(betti);
            j["poincare_polynomial"] = to_json(poly);
            emit(out, j);
        } else {
            out << table::dims(betti, "fixed-locus Betti numbers")
                << "Poincare polynomial: " << poly.to_string() << '\n';
        }
        return 0;
    }
    if (o.verb == "borel") {
        const BorelModule b = tau_localize(m);
        if (json) emit(out, to_json(b));
        else out << table::borel(b) << "class: " << to_string(borel_classify(b)) << '\n';
        return 0;
    }
    if (o.verb == "singular") {
        const C2GradedSpace s = underlying_singular(m);
        if (json) emit(out, to_json(s));
        else out << table::c2_space(s);
        return 0;
    }
    if (o.verb == "image") {
        const GradedDims image = forgetful_image_dims(m);
        if (json) emit(out, to_json(image));
        else out << table::dims(image, "forgetful image dimensions");
        return 0;
    }
    if (o.verb == "rankpoly") {
        const BivariatePolynomial r = rank_polynomial(m);
        if (json) emit(out, to_json(r));
        else out << r.to_string() << '\n';
        return 0;
    }
    if (o.verb == "report") {
        const SmithThomReport st = smith_thom_report(m);
        const GradedDims fixed = rho_localize(m);
        const BorelModule borel = tau_localize(m);
        const C2GradedSpace singular = underlying_singular(m);
        const GradedDims image = forgetful_image_dims(m);
        std::optional<PdResult> pd;
        int n = 0;
        if (o.pd || o.dim) {
            n = dimension_for(o, in);
            pd = pd_symmetric(m, n);
        }
        if (json) {
            Json j;
            j["module"] = to_json(m);
            j["smith_thom"] = to_json(st);
            j["fixed"] = to_json(fixed);
            j["fixed_poincare_polynomial"] = to_json(fixed_poincare_polynomial(m));
            j["borel"] = to_json(borel);
            j["borel_class"] = std::string(to_string(borel_classify(borel)));
            j["singular"] = to_json(singular);
            j["image"] = to_json(image);
            j["rank_polynomial"] = to_json(rank_polynomial(m));
            if (pd) j["pd"] = to_json(*pd);
            emit(out, j);
        } else {
            out << table::lattice(m) << table::smith_thom(st)
                << table::dims(fixed, "fixed-locus Betti numbers") << table::borel(borel)
                << table::c2_space(singular) << table::dims(image, "forgetful image dimensions")
                << "rank polynomial: " << rank_polynomial(m).to_string() << '\n';
            if (pd) out << table::pd(*pd, n);
        }
        return pd && !pd->holds ? 1 : 0;
    }
    if (o.verb == "pd-check") {
        const int n = dimension_for(o, in);
        const PdResult pd = pd_symmetric(m, n);
        if (json) emit(out, to_json(pd));
        else out << table::pd(pd, n);
        return pd.holds ? 0 : 1;
    }
    if (o.verb == "validate") {
        const int n = dimension_for(o, in);
        bool fixed_point = o.fixed_point;
        bool connected = o.connected;
        if (in.entry) {
            fixed_point = fixed_point || in.entry->metadata.has_fixed_point;
            connected = connected || in.entry->metadata.connected;
        }
        const ValidationReport report = real_manifold_validate(m, n, fixed_point, connected);
        if (json) emit(out, to_json(report));
        else out << table::validation(report);
        return report.passed() ? 0 : 1;
    }
    if (o.verb == "hodge") {
        std::optional<BivariatePolynomial> hodge;
        if (!o.hodge_path.empty()) hodge = bivariate_from_json(parse_json(read_file(o.hodge_path)));
        else if (in.entry) hodge = in.entry->metadata.hodge_polynomial;
        if (!hodge) throw UsageError("'hodge' needs --hodge FILE (no catalog Hodge polynomial)");
        const bool birank = hodge_birank_check(m, *hodge);
        std::optional<bool> expressive;
        if (o.torsion_free) expressive = hodge_expressive_check(m, *hodge, true);
        if (json) {
            Json j;
            j["hodge_polynomial"] = to_json(*hodge);
            j["birank"] = birank;
            j["expressive"] = expressive ? Json(*expressive) : Json(nullptr);
            emit(out, j);
        } else {
            out << "hodge polynomial: " << hodge->to_string() << '\n'
                << "H(t,1):          " << hodge->substitute(1, 0).to_string() << '\n'
                << "R(t,1/t):        " << fixed_poincare_polynomial(m).to_string() << '\n'
                << "birank equality: " << (birank ? "yes" : "no") << '\n'
                << "hodge expressive: "
                << (expressive ? (*expressive ? "yes" : "no") : "unknown (pass --torsion-free)")
                << '\n';
        }
        return birank && expressive.value_or(true) ? 0 : 1;
    }
    throw UsageError("unknown verb '" + o.verb + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Normal-form calculus for bigraded Bredon cohomology of C2-spaces", "bredon"};
    app.add_option("verb", o.verb, "command")->required()->check(CLI::IsMember(kVerbs));
    app.add_option("--catalog", o.catalog_name, "catalog entry name");
    app.add_option("--param", o.params, "catalog parameter KEY=VALUE (repeatable)")
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    app.add_option("--module", o.module_path, "module JSON file");
    app.add_option("--constraints", o.constraints_path, "constraint set JSON file");
    app.add_option("--hodge", o.hodge_path, "Hodge polynomial JSON file [[p,q,h],...]");
    app.add_option("--dim", o.dim, "complex dimension n");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json"}));
    app.add_flag("--json", o.json, "same as --format json");
    app.add_flag("--fixed-point", o.fixed_point, "the space has a fixed point");
    app.add_flag("--connected", o.connected, "the space is connected");
    app.add_flag("--pd", o.pd, "assert or check Poincare duality");
    app.add_flag("--torsion-free", o.torsion_free, "integral cohomology is torsion-free");
    app.add_option("--jobs", o.jobs, "solver worker threads")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        return run_verb(o, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace bredon::cli
