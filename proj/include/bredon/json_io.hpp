#pragma once

// JSON encodings. Output uses insertion-ordered objects so serialization is
// canonical: identical values always dump to identical bytes.
//
//   module       {"free":[[p,q,mult],...],"antipodal":[[r,n,mult],...]}
//   borel        {"free":[[p,mult],...],"torsion":[[r,n,mult],...]}
//   c2 space     {"trivial":[[d,count],...],"regular":[[d,count],...]}
//   dims         [[d,count],...]
//   constraints  {"n":..,"betti_total":[b0,b1,..],"betti_fixed":[..]|null,
//                 "has_fixed_point":bool,"connected":bool,"poincare_dual":bool,
//                 "forgetful_onto_degrees":[..]|null,"class_filter":"M"|"GM"|"NEITHER"|null}

#include <string>
#include <string_view>

#include <json.hpp>

#include "bredon/catalog.hpp"
#include "bredon/classification.hpp"
#include "bredon/core.hpp"
#include "bredon/localization.hpp"
#include "bredon/solver.hpp"

namespace bredon {

using Json = nlohmann::ordered_json;

/// Parse text as JSON; syntax errors become ParseError with line and column.
nlohmann::json parse_json(std::string_view text);

Json to_json(const NormalFormModule& m);
Json to_json(const GradedDims& d);
Json to_json(const C2GradedSpace& s);
Json to_json(const BorelModule& b);
Json to_json(const HomologyModule& h);
Json to_json(const UnivariatePolynomial& p);
Json to_json(const BivariatePolynomial& p);
Json to_json(const SmithThomReport& r);
Json to_json(const PdResult& r);
Json to_json(const ValidationReport& r);
Json to_json(const Prediction& p);
Json to_json(const ConstraintSet& c);
Json to_json(const CatalogEntry& e);
Json catalog_list_json();

/// Compact canonical dump of a module, one line.
std::string to_canonical_string(const NormalFormModule& m);

// Decoders throw SchemaError naming the offending field.
NormalFormModule module_from_json(const nlohmann::json& j, bool cw_flag = true);
ConstraintSet constraints_from_json(const nlohmann::json& j);
BivariatePolynomial bivariate_from_json(const nlohmann::json& j);

NormalFormModule parse_module(std::string_view text, bool cw_flag = true);
ConstraintSet parse_constraints(std::string_view text);

}  // namespace bredon
