#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace zdx {

/// Seeded source for all lab randomness. Draws are platform independent
/// (raw mt19937_64 output, no std distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed), seed_(seed) {}
  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return gen_(); }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi) { return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  std::complex<double> unimodular();

 private:
  std::mt19937_64 gen_;
  std::uint64_t seed_;
};

/// Independent seed for the i-th unit of a batch.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i);

}  // namespace zdx
