#pragma once

// Plain-text renderings for the command-line tool.

#include <string>

#include "bredon/catalog.hpp"
#include "bredon/classification.hpp"
#include "bredon/core.hpp"
#include "bredon/localization.hpp"
#include "bredon/solver.hpp"

namespace bredon::table {

/// Free ranks drawn on the (p,q) lattice, weight increasing upwards, followed
/// by the a-ranks on an (r,n) grid when there are antipodal summands.
std::string lattice(const NormalFormModule& m);

std::string dims(const GradedDims& d, const std::string& title);
std::string c2_space(const C2GradedSpace& s);
std::string borel(const BorelModule& b);
std::string smith_thom(const SmithThomReport& r);
std::string pd(const PdResult& r, int n);
std::string validation(const ValidationReport& r);
std::string prediction(const std::string& name, const Prediction& p);
std::string catalog(const std::vector<CatalogFamily>& families);
std::string entry(const CatalogEntry& e);

}  // namespace bredon::table
