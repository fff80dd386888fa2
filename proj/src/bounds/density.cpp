#include "zdx/bounds/density.hpp"

#include <algorithm>
#include <stdexcept>

namespace zdx {

Rat SigmaPoly::at(const Rat& s) const {
  Rat out(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * s + *it;
  return out;
}

double SigmaPoly::at(double s) const {
  double out = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * s + it->to_double();
  return out;
}

int SigmaPoly::degree() const {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (!c[i].is_zero()) return i;
  return -1;
}

std::string SigmaPoly::str() const {
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rat& r = c[i];
    if (r.is_zero()) continue;
    const bool neg = r.sign() < 0;
    const Rat m = neg ? -r : r;
    std::string t;
    if (i == 0)
      t = m.str();
    else
      t = (m == Rat(1) ? "" : m.str() + "*") + (i == 1 ? "s" : "s^" + std::to_string(i));
    if (s.empty())
      s = neg ? "-" + t : t;
    else
      s += (neg ? " - " : " + ") + t;
  }
  return s.empty() ? "0" : s;
}

SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  SigmaPoly out{std::vector<Rat>(a.c.size() + b.c.size() - 1, Rat(0))};
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  return out;
}

SigmaPoly operator-(const SigmaPoly& a, const SigmaPoly& b) {
  SigmaPoly out{std::vector<Rat>(std::max(a.c.size(), b.c.size()), Rat(0))};
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
  return out;
}

Rat SigmaRatio::at(const Rat& s) const {
  const Rat d = den.at(s);
  if (d.is_zero()) throw std::domain_error("denominator " + den.str() + " vanishes at sigma = " + s.str());
  return num.at(s) / d;
}

std::string SigmaRatio::str() const { return "(" + num.str() + ")/(" + den.str() + ")"; }

namespace {

SigmaPoly lin(Rat c0, Rat c1) { return SigmaPoly{{std::move(c0), std::move(c1)}}; }

}  // namespace

DensityBound ivic() {
  return {"ivic", {{lin(3, -3), lin(-4, 7)}}, {Rat(3, 4), Rat(10, 13)}, std::nullopt, "3(1-s)/(7s-4)"};
}

DensityBound jutila(int k) {
  if (k < 2) throw std::invalid_argument("jutila: k = " + std::to_string(k) + " must be at least 2");
  const Rat kk(k);
  return {"jutila",
          {{lin(Rat(3) * kk, Rat(-3) * kk), lin(Rat(2) - kk, Rat(3) * kk - Rat(2))}},
          {Rat(1, 2), Rat(1)},
          k,
          "3k(1-s)/((3k-2)s+2-k)"};
}

DensityBound zerodensity2() {
  return {"zerodensity2", {{lin(3, -3), lin(0, 2)}}, {Rat(23, 29), Rat(1)}, std::nullopt, "3(1-s)/(2s)"};
}

DensityBound zerodensity1() {
  const SigmaPoly den = lin(-89, 138);
  return {"zerodensity1",
          {{lin(36, -36), den}, {lin(-79, 114), den}},
          {Rat(127, 168), Rat(107, 138)},
          std::nullopt,
          "max(36(1-s), 114s-79)/(138s-89)"};
}

DensityBound zerodensity1_term(int index) {
  if (index != 0 && index != 1) throw std::invalid_argument("zerodensity1 has pieces 0 and 1");
  DensityBound b = zerodensity1();
  b.pieces = {b.pieces[index]};
  b.id = index == 0 ? "zerodensity1.first" : "zerodensity1.second";
  b.provenance = index == 0 ? "36(1-s)/(138s-89)" : "(114s-79)/(138s-89)";
  return b;
}

Rat density_exponent(const DensityBound& bound, const Rat& sigma) {
  if (!bound.in_range(sigma))
    throw std::out_of_range("sigma = " + sigma.str() + " is outside the range [" + bound.sigma_range.lo.str() +
                            ", " + bound.sigma_range.hi.str() + "] of bound '" + bound.id + "'");
  return closed_form(bound, sigma);
}

Rat closed_form(const DensityBound& bound, const Rat& sigma) {
  Rat best = bound.pieces.front().at(sigma);
  for (std::size_t i = 1; i < bound.pieces.size(); ++i) best = max(best, bound.pieces[i].at(sigma));
  return best;
}

}  // namespace zdx
