#pragma once

#include <string>

#include <json.hpp>

#include "zdx/lab/bprocess.hpp"
#include "zdx/lab/harness.hpp"

namespace zdx {

/// Round-trip decimal rendering, independent of locale.
std::string decimal(double x);

nlohmann::ordered_json to_json(const IneqReport& r);
nlohmann::ordered_json to_json(const SuiteLine& s);
nlohmann::ordered_json to_json(const TrendReport& tr);
nlohmann::ordered_json to_json(const BProcessReport& b);
nlohmann::ordered_json to_json(const FejerFacts& f);

}  // namespace zdx
