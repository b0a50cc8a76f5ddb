#pragma once

#include "qes/multipoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qes {

// Polynomial in the spatial variable x whose coefficients are MultiPoly values
// over a shared registry. coeffs_[k] multiplies x^k; the top entry is nonzero.
class XPoly {
 public:
  explicit XPoly(RegistryPtr registry);
  XPoly(RegistryPtr registry, std::vector<MultiPoly> coeffs);

  static XPoly monomial(RegistryPtr registry, unsigned degree, MultiPoly coeff);
  static XPoly constant(MultiPoly c);
  static XPoly x(RegistryPtr registry);

  const RegistryPtr& registry() const { return registry_; }
  bool is_zero() const { return coeffs_.empty(); }
  // nullopt stands for the degree of the zero polynomial (minus infinity).
  std::optional<unsigned> degree() const;
  MultiPoly coeff(unsigned k) const;
  const std::vector<MultiPoly>& coefficients() const { return coeffs_; }

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& g);
  XPoly& operator-=(const XPoly& g);
  XPoly& operator*=(const XPoly& g);
  XPoly& operator*=(const MultiPoly& c);
  XPoly& operator*=(const Rational& c);

  friend XPoly operator+(XPoly f, const XPoly& g) { return f += g; }
  friend XPoly operator-(XPoly f, const XPoly& g) { return f -= g; }
  friend XPoly operator*(XPoly f, const XPoly& g) { return f *= g; }
  friend XPoly operator*(XPoly f, const MultiPoly& c) { return f *= c; }
  friend XPoly operator*(XPoly f, const Rational& c) { return f *= c; }
  friend XPoly operator*(const Rational& c, XPoly f) { return f *= c; }

  // d/dx.
  XPoly derivative() const;
  // d/dx when var is "x", otherwise coefficient-wise partial derivative.
  XPoly derivative(std::string_view var) const;
  // Antiderivative in x with zero constant term.
  XPoly antiderivative() const;
  XPoly substitute(std::size_t var, const MultiPoly& value) const;
  XPoly embed(const RegistryPtr& target) const;

  std::string to_string() const;
  bool operator==(const XPoly& other) const;

 private:
  void trim();

  RegistryPtr registry_;
  std::vector<MultiPoly> coeffs_;
};

XPoly mp_derivative(const XPoly& p, std::string_view var);

// Nonzero coefficients in decreasing degree.
std::vector<std::pair<unsigned, MultiPoly>> x_coefficients(const XPoly& p);
XPoly from_x_coefficients(RegistryPtr registry, const std::vector<std::pair<unsigned, MultiPoly>>& coeffs);

}  // namespace qes
