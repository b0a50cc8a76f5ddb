#include "qes/square_form.hpp"

#include "qes/errors.hpp"

namespace qes {

XPoly SquareForm::w() const {
  return XPoly::monomial(b.registry(), n, MultiPoly::constant(b.registry(), 1)) + b;
}

XPoly SquareForm::reconstruct() const {
  const XPoly root = w();
  return root * root + c;
}

SquareForm complete_square(const XPoly& v, unsigned n) {
  const auto& reg = v.registry();
  if (n == 0) throw PreconditionError("complete_square needs n >= 1");
  const auto degree = v.degree();
  if (!degree || *degree != 2 * n)
    throw PreconditionError("complete_square: expected degree " + std::to_string(2 * n) + ", got " +
                            (degree ? std::to_string(*degree) : std::string("-inf")));
  const auto lead = v.coeff(2 * n).constant_value();
  if (!lead || *lead != 1) throw PreconditionError("complete_square: potential is not monic");

  // The x^(n+i) coefficient of (x^n + B)^2 is 2 b_i plus products b_j b_k with
  // j + k = n + i, and both j, k > i are already known when i runs downwards.
  std::vector<MultiPoly> b(n, MultiPoly(reg));
  for (unsigned i = n; i-- > 0;) {
    MultiPoly acc = v.coeff(n + i);
    for (unsigned j = i + 1; j < n; ++j) {
      const unsigned k = n + i - j;
      if (k > i && k < n) acc -= b[j] * b[k];
    }
    b[i] = acc * ratio(1, 2);
  }
  SquareForm sf{n, XPoly(reg, b), XPoly(reg)};
  sf.c = v - sf.w() * sf.w();
  if (sf.c.degree() && *sf.c.degree() >= n) throw InternalError("square completion left a high-degree remainder");
  return sf;
}

SquareForm shift_by_lambda(const SquareForm& sf) {
  const auto& reg = sf.c.registry();
  const auto eigen = reg->eigenvalue();
  if (!eigen) throw PreconditionError("registry has no eigenvalue variable");
  SquareForm out = sf;
  out.c -= XPoly::constant(MultiPoly::variable(reg, *eigen));
  return out;
}

}  // namespace qes
