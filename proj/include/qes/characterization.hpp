#pragma once

#include "qes/square_form.hpp"

#include <optional>
#include <string_view>

namespace qes {

// plus: psi = P e^{+f}; minus: psi = P e^{-f}.
enum class BranchSign { Plus, Minus };

std::string_view to_string(BranchSign sign);
BranchSign parse_branch_sign(std::string_view text);
inline int sign_value(BranchSign s) { return s == BranchSign::Plus ? 1 : -1; }

struct ParityResult {
  enum class Kind { Even, NotIntegrable };
  Kind kind = Kind::Even;
  unsigned n = 0;
  // Degree 0 or 2: the potential is algebraically solvable.
  bool solvable_advisory = false;
};

// Odd degree -> NotIntegrable; degree 2n -> n.
ParityResult parity_guard(const XPoly& v);

struct QuantizationConstraint {
  BranchSign sign;
  unsigned s;
  // +-c_{n-1} - n - 2s over Q[lambda, params]; must vanish.
  MultiPoly polynomial;

  bool parameterized() const { return !polynomial.is_constant(); }
};

// +-c_{n-1} - n - 2s, whatever its value.
MultiPoly quantization_polynomial(const SquareForm& sf_lambda, unsigned s, BranchSign sign);

// nullopt when the constraint is a nonzero rational (no degree-s solution on
// this branch). A zero polynomial means the condition holds identically.
std::optional<QuantizationConstraint> quantization(const SquareForm& sf_lambda, unsigned s, BranchSign sign);

// P'' + a1 P' + a0 P = 0.
struct AuxiliaryODE {
  BranchSign sign;
  XPoly a1;
  XPoly a0;
};

// Expects the lambda-shifted square form.
AuxiliaryODE auxiliary_ode(const SquareForm& sf_lambda, BranchSign sign);

struct ExponentData {
  XPoly f;
};

// f = x^{n+1}/(n+1) + sum b_k x^{k+1}/(k+1), so f' = x^n + B.
ExponentData exponent(const SquareForm& sf);

}  // namespace qes
