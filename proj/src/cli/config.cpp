#include "zdx/cli/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace zdx::cli {

double RunConfig::tolerance(const std::string& key, double fallback) const {
  const auto it = tolerances.find(key);
  return it == tolerances.end() ? fallback : it->second;
}

std::uint64_t parse_seed(const std::string& text, const std::string& origin) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size() || text.empty())
    throw UsageError(origin + ": seed must be an unsigned 64-bit integer, got '" + text + "'");
  return v;
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw UsageError("format must be csv or json, got '" + text + "'");
}

std::string format_name(Format f) { return f == Format::csv ? "csv" : "json"; }

RunConfig parse_config(const std::string& text, const std::string& origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(origin + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) throw UsageError(origin + ": config must be a JSON object");
  RunConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (key == "seed") {
      if (value.is_number_unsigned())
        cfg.seed = value.get<std::uint64_t>();
      else if (value.is_string())
        cfg.seed = parse_seed(value.get<std::string>(), origin);
      else
        throw UsageError(origin + ": seed must be a nonnegative integer");
      cfg.seed_set = true;
    } else if (key == "slack_budget") {
      if (!value.is_number() || !(value.get<double>() > 0)) throw UsageError(origin + ": slack_budget must be positive");
      cfg.slack_budget = value.get<double>();
    } else if (key == "format") {
      if (!value.is_string()) throw UsageError(origin + ": format must be a string");
      cfg.format = parse_format(value.get<std::string>());
    } else if (key == "tolerances") {
      if (!value.is_object()) throw UsageError(origin + ": tolerances must be an object");
      for (const auto& [tk, tv] : value.items()) {
        if (tk != "bprocess" && tk != "harness") throw UsageError(origin + ": unknown tolerance '" + tk + "'");
        if (!tv.is_number() || !(tv.get<double>() > 0)) throw UsageError(origin + ": tolerance '" + tk + "' must be positive");
        cfg.tolerances[tk] = tv.get<double>();
      }
    } else {
      throw UsageError(origin + ": unknown config key '" + key + "'");
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, std::optional<std::uint64_t> from_config) {
  if (flag) return *flag;
  if (from_config) return *from_config;
  if (const char* env = std::getenv("ZDX_SEED"); env && *env) return parse_seed(env, "ZDX_SEED");
  return 0;
}

}  // namespace zdx::cli
