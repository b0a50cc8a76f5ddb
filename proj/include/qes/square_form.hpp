#pragma once

#include "qes/xpoly.hpp"

namespace qes {

// V = (x^n + B)^2 + C with deg B < n and deg C < n.
struct SquareForm {
  unsigned n = 0;
  XPoly b;
  XPoly c;

  // W = x^n + B, the derivative of the eigenfunction exponent.
  XPoly w() const;
  // Expands (x^n + B)^2 + C.
  XPoly reconstruct() const;
};

// Precondition: v is monic of degree exactly 2n with n >= 1.
SquareForm complete_square(const XPoly& v, unsigned n);

// Square form of V - lambda; the registry must contain the eigenvalue variable.
SquareForm shift_by_lambda(const SquareForm& sf);

}  // namespace qes
