#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdx/ratcalc/optimize.hpp"
#include "zdx/ratcalc/rat.hpp"

namespace zdx {

enum class Strategy { zd1, zd2 };

std::string strategy_name(Strategy s);
/// Accepts "zd1" and "zd2"; throws std::invalid_argument otherwise.
Strategy strategy_from_name(const std::string& name);

/// One bound applied on one nu-subinterval with d(nu) = min(0, d_line(nu)).
struct CertPiece {
  Interval nu;
  std::string bound;
  std::optional<int> k;
  std::string d_formula;  ///< "none" for bounds without delta
  Rat worst_nu;
  Rat achieved;
  bool ok = true;
  std::string violation;  ///< empty when ok
};

/// A side condition of the form lhs <= rhs.
struct SideCheck {
  std::string label;
  Rat lhs;
  Rat rhs;
  bool ok = false;
};

struct StrategyCertificate {
  Strategy strategy = Strategy::zd2;
  Rat sigma;
  Rat target;
  Rat y;
  std::optional<Rat> split;  ///< rho for zd2, z for zd1
  std::vector<CertPiece> pieces;
  Rat reduction_term;  ///< 2 + 6y(1 - 2 sigma)
  std::vector<SideCheck> checks;
  std::vector<std::string> assumptions;
  bool pass = false;
};

/// Closed strategy ranges: zd2 on [23/29, 1), zd1 on [127/168, 107/138].
Interval strategy_range(Strategy s);
bool in_strategy_range(Strategy s, const Rat& sigma);

/// Replays the parameter choices of a strategy and checks every term and
/// constraint exactly over the whole nu-range. Throws std::out_of_range for
/// sigma outside the strategy range; a failed check yields pass = false.
StrategyCertificate replay(Strategy s, const Rat& sigma);

/// The zd2 split point rho (see replay); +infinity for the first candidate
/// is represented by omitting it when 10 - 12 sigma <= 0.
Rat zd2_rho(const Rat& sigma);

}  // namespace zdx
