#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zdx/bounds/catalog.hpp"

namespace zdx {

/// Catalog export. Schema (see docs/catalog-schema.md):
///   {"format": "zdx-catalog", "version": 1, "bounds": [ {
///      "id", "provenance", "k_min" (int or null), "assumed": [str],
///      "terms": [expr], "constraints": [{"expr", "rel": "<=0"|">=0", "label"}] } ]}
/// where expr = {"constant": coeff, "coeffs": {"nu"|"upsilon"|"d": coeff}}
/// and coeff is either a "p/q" string or {"num": [a, b], "den": [c, e]}
/// meaning (a + b*k)/(c + e*k) with a, b, c, e as "p/q" strings.
std::string catalog_to_json(const std::vector<LargeValueBound>& bounds, int indent = 2);

/// Inverse of catalog_to_json. Throws std::invalid_argument on malformed input.
std::vector<LargeValueBound> catalog_from_json(std::string_view text);

/// Multi-line human-readable rendering with k left symbolic.
std::string describe(const LargeValueBound& bound);

}  // namespace zdx
