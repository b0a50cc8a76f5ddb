#include "qes/characterization.hpp"

#include "qes/errors.hpp"

namespace qes {

std::string_view to_string(BranchSign sign) { return sign == BranchSign::Plus ? "plus" : "minus"; }

BranchSign parse_branch_sign(std::string_view text) {
  if (text == "plus" || text == "+") return BranchSign::Plus;
  if (text == "minus" || text == "-") return BranchSign::Minus;
  throw UsageError("unknown branch sign '" + std::string(text) + "'");
}

ParityResult parity_guard(const XPoly& v) {
  ParityResult r;
  const auto degree = v.degree();
  if (!degree || *degree == 0) {
    r.n = 0;
    r.solvable_advisory = true;
    return r;
  }
  if (*degree % 2 == 1) {
    r.kind = ParityResult::Kind::NotIntegrable;
    return r;
  }
  r.n = *degree / 2;
  r.solvable_advisory = *degree == 2;
  return r;
}

MultiPoly quantization_polynomial(const SquareForm& sf_lambda, unsigned s, BranchSign sign) {
  const auto& reg = sf_lambda.c.registry();
  MultiPoly c_top = sf_lambda.c.coeff(sf_lambda.n - 1);
  if (sign == BranchSign::Minus) c_top = -c_top;
  return c_top - MultiPoly::constant(reg, Rational(static_cast<long>(sf_lambda.n + 2 * s)));
}

std::optional<QuantizationConstraint> quantization(const SquareForm& sf_lambda, unsigned s, BranchSign sign) {
  MultiPoly q = quantization_polynomial(sf_lambda, s, sign);
  if (q.is_constant() && !q.is_zero()) return std::nullopt;
  return QuantizationConstraint{sign, s, std::move(q)};
}

AuxiliaryODE auxiliary_ode(const SquareForm& sf_lambda, BranchSign sign) {
  const XPoly w = sf_lambda.w();
  const XPoly dw = w.derivative();
  if (sign == BranchSign::Plus) return {sign, Rational(2) * w, dw - sf_lambda.c};
  return {sign, Rational(-2) * w, -(dw + sf_lambda.c)};
}

ExponentData exponent(const SquareForm& sf) { return {sf.w().antiderivative()}; }

}  // namespace qes
