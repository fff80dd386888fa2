#include "zdx/optimizer/reduction.hpp"

#include <stdexcept>

namespace zdx {

ReductionInstance reduce(const Rat& sigma, const Rat& y) {
  if (sigma <= Rat(1, 2) || sigma >= Rat(1))
    throw std::invalid_argument("reduce: sigma = " + sigma.str() + " is outside (1/2, 1)");
  if (y.sign() <= 0) throw std::invalid_argument("reduce: y = " + y.str() + " must be positive");
  return {sigma, y, Rat(2) + Rat(6) * y * (Rat(1) - Rat(2) * sigma), {Rat(4, 3) * y, Rat(2) * y}};
}

}  // namespace zdx
