#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdx/ratcalc/optimize.hpp"
#include "zdx/ratcalc/rat.hpp"

namespace zdx {

/// Polynomial in sigma, coefficients in ascending degree.
struct SigmaPoly {
  std::vector<Rat> c;

  Rat at(const Rat& s) const;
  double at(double s) const;
  int degree() const;
  std::string str() const;
  friend SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b);
  friend SigmaPoly operator-(const SigmaPoly& a, const SigmaPoly& b);
  friend bool operator==(const SigmaPoly&, const SigmaPoly&) = default;
};

/// num(sigma) / den(sigma).
struct SigmaRatio {
  SigmaPoly num, den;
  Rat at(const Rat& s) const;
  std::string str() const;
  friend bool operator==(const SigmaRatio&, const SigmaRatio&) = default;
};

/// N(sigma, T) << T^{exponent(sigma)} on a closed sigma range. The exponent
/// is the max over one or more rational functions.
struct DensityBound {
  std::string id;
  std::vector<SigmaRatio> pieces;
  Interval sigma_range;
  std::optional<int> k;
  std::string provenance;

  bool in_range(const Rat& s) const { return sigma_range.contains(s); }
};

/// 3(1-s)/(7s-4) on [3/4, 10/13].
DensityBound ivic();
/// 3k(1-s)/((3k-2)s+2-k) for k >= 2 on [1/2, 1].
DensityBound jutila(int k);
/// 3(1-s)/(2s) on [23/29, 1].
DensityBound zerodensity2();
/// max(36(1-s), 114s-79)/(138s-89) on [127/168, 107/138].
DensityBound zerodensity1();
/// One of the two pieces of zerodensity1 (index 0 or 1) on the same range.
DensityBound zerodensity1_term(int index);

/// Max over the pieces at sigma with no range check. Throws
/// std::domain_error where a denominator vanishes.
Rat closed_form(const DensityBound& bound, const Rat& sigma);

/// Exact exponent; throws std::out_of_range naming the bound when sigma is
/// outside its range.
Rat density_exponent(const DensityBound& bound, const Rat& sigma);

}  // namespace zdx
