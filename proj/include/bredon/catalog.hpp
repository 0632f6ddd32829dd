#pragma once

// Closed-form decompositions for standard C2-spaces and real varieties.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bredon/classification.hpp"
#include "bredon/core.hpp"

namespace bredon {

struct CatalogMetadata {
    int dimension = 0;  // complex dimension n of the Real manifold
    bool has_fixed_point = false;
    bool connected = true;
    MaximalityClass expected_class = MaximalityClass::Maximal;
    bool is_real_manifold = true;
    std::optional<BivariatePolynomial> hodge_polynomial;
    std::string notes;
};

struct CatalogEntry {
    std::string name;
    std::map<std::string, int> parameters;
    NormalFormModule module;
    CatalogMetadata metadata;
};

struct ParameterSpec {
    std::string name;
    int min = 0;
    std::optional<int> max;
    std::string description;
};

struct CatalogFamily {
    std::string name;
    std::vector<ParameterSpec> parameters;
    std::string description;
};

const std::vector<CatalogFamily>& catalog_list();

/// Throws UnknownName for an unknown family and ParameterRange for missing,
/// unexpected or out-of-range parameters.
CatalogEntry catalog_get(const std::string& name, const std::map<std::string, int>& parameters = {});

/// Realizable (b_*, chi) pairs for the real part of a real K3 surface.
const std::vector<std::pair<int, int>>& k3_moduli_lattice();

}  // namespace bredon
