#include "zdx/ratcalc/rat.hpp"

#include <cctype>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace zdx {

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? BigInt(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat::Rat(long long n) : v_(n) {}

Rat::Rat(long long n, long long d) : Rat(BigInt(n), BigInt(d)) {}

Rat::Rat(BigInt n, BigInt d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  v_ = Value(std::move(n), std::move(d));
}

Rat Rat::parse(std::string_view text) {
  const auto t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(t, text), BigInt(1));
  const auto den = parse_integer(t.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rat(parse_integer(t.substr(0, slash), text), den);
}

BigInt Rat::num() const { return boost::multiprecision::numerator(v_); }
BigInt Rat::den() const { return boost::multiprecision::denominator(v_); }

int Rat::sign() const { return v_.sign(); }

double Rat::to_double() const { return v_.convert_to<double>(); }

std::string Rat::str() const {
  if (den() == 1) return num().str();
  return num().str() + "/" + den().str();
}

Rat Rat::operator-() const { return Rat(Value(-v_)); }

Rat& Rat::operator+=(const Rat& rhs) {
  v_ += rhs.v_;
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
  v_ -= rhs.v_;
  return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
  v_ *= rhs.v_;
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= rhs.v_;
  return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  const int c = a.v_.compare(b.v_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

BigInt floor(const Rat& r) {
  BigInt q, rem;
  boost::multiprecision::divide_qr(r.num(), r.den(), q, rem);
  if (rem < 0) q -= 1;
  return q;
}

Rat pow(const Rat& r, int e) {
  if (e < 0) {
    if (r.is_zero()) throw std::domain_error("negative power of zero");
    return Rat(1) / pow(r, -e);
  }
  Rat out(1);
  Rat base = r;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

std::optional<Rat> exact_sqrt(const Rat& r) {
  if (r.sign() < 0) return std::nullopt;
  const BigInt n = r.num();
  const BigInt d = r.den();
  const BigInt sn = boost::multiprecision::sqrt(n);
  const BigInt sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rat(sn, sd);
}

}  // namespace zdx
