#pragma once

#include <string>

#include "zdx/optimizer/crossover.hpp"
#include "zdx/optimizer/replay.hpp"
#include "zdx/optimizer/search.hpp"

namespace zdx {

// JSON renderings; every exact value is a "p/q" string.
std::string to_json(const StrategyCertificate& cert, int indent = 2);
std::string to_json(const SearchResult& res, int indent = 2);
std::string to_json(const Crossover& c, int indent = 2);

}  // namespace zdx
