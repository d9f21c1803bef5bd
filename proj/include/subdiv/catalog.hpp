#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subdiv/scheme.hpp"

namespace subdiv {

struct UnknownScheme : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Built-in schemes, constructed once. Binary masks are anchored at index 0;
/// each quaternary entry is the independently transcribed counterpart of its
/// binary twin, anchored so that it coincides with the conversion output.
const std::map<std::string, SubdivisionScheme>& builtin_catalog();

/// Deep copy of a catalog entry; throws UnknownScheme for unknown names.
SubdivisionScheme catalog_get(const std::string& name);

std::vector<std::string> catalog_names();

struct CatalogPair {
    std::string binary;
    std::string quaternary;
};

/// The seven binary/quaternary pairs, binary side even-point dual.
const std::vector<CatalogPair>& conversion_pairs();

/// Hoelder regularity value on record in the literature for a catalog
/// scheme, when one exists. These carry known rounding artifacts; exact
/// computations may disagree (see RegularityReport::disagrees_with_published).
std::optional<double> published_regularity(const std::string& name);

/// Published value for the quaternary twin of a catalog binary.
std::optional<double> published_regularity_quaternary(const std::string& binary_name);

struct DegreeRecord {
    int precision = -1;
    int generation = -1;
};

/// Degree of precision / generation on record for a catalog scheme.
std::optional<DegreeRecord> published_degrees(const std::string& name);

}  // namespace subdiv
