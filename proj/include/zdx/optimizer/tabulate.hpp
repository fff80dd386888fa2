#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdx/bounds/density.hpp"
#include "zdx/optimizer/replay.hpp"

namespace zdx {

struct TableCell {
  std::string id;             ///< e.g. "zerodensity1", "jutila5"
  std::optional<Rat> value;   ///< empty when sigma is out of range
};

struct ReplayCell {
  Strategy strategy;
  std::optional<StrategyCertificate> cert;  ///< empty when out of range
};

struct TableRow {
  Rat sigma;
  std::vector<TableCell> cells;
  std::vector<ReplayCell> replays;
  std::string best;  ///< id of the smallest in-range value, "" if none
};

struct TabulateOptions {
  std::vector<Strategy> strategies{Strategy::zd1, Strategy::zd2};
  bool compare = false;  ///< add ivic and jutila(2..8) columns
  unsigned threads = 0;  ///< 0 picks hardware concurrency
};

/// zerodensity1 and zerodensity2 always appear.
std::vector<DensityBound> table_bounds(bool compare);
std::string cell_id(const DensityBound& b);

/// One row per grid point, computed concurrently and returned in grid order.
/// Throws std::invalid_argument if a sigma is outside (1/2, 1).
std::vector<TableRow> tabulate(const std::vector<Rat>& grid, const TabulateOptions& opts = {});

/// lo, lo + step, ... <= hi. Throws std::invalid_argument for step <= 0.
std::vector<Rat> rational_grid(const Rat& lo, const Rat& hi, const Rat& step);

}  // namespace zdx
