#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace zdx {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always stored in lowest terms with a positive denominator, so two Rats
/// compare equal iff their (num, den) pairs are identical. Division by zero
/// throws std::domain_error.
class Rat {
 public:
  Rat() = default;
  Rat(long long n);  // NOLINT(google-explicit-constructor): integer literals in formulas
  Rat(long long n, long long d);
  Rat(BigInt n, BigInt d);

  /// Accepts "p/q", "p" or "-p/q" with optional surrounding whitespace.
  /// Decimal points are rejected. Throws std::invalid_argument.
  static Rat parse(std::string_view text);

  BigInt num() const;
  BigInt den() const;

  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }
  int sign() const;

  double to_double() const;
  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit Rat(Value v) : v_(std::move(v)) {}
  Value v_{0};
};

Rat abs(const Rat& r);
Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);
/// Largest integer <= r.
BigInt floor(const Rat& r);
/// r^e for any integer e (negative powers of zero throw).
Rat pow(const Rat& r, int e);
/// Exact square root when r is the square of a rational, otherwise nullopt.
std::optional<Rat> exact_sqrt(const Rat& r);

}  // namespace zdx
