#include "zdx/lab/random.hpp"

#include <cmath>
#include <numbers>

namespace zdx {

std::complex<double> Rng::unimodular() {
  const double theta = 2 * std::numbers::pi * uniform();
  return {std::cos(theta), std::sin(theta)};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace zdx
