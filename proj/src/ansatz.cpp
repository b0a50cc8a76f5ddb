#include "qes/ansatz.hpp"

#include "qes/errors.hpp"

#include <cctype>

namespace qes {

std::string unknown_name(unsigned j) { return "p" + std::to_string(j); }

bool is_reserved_name(std::string_view name) {
  if (name == kSpatialVariable || name == kEigenvalueName) return true;
  if (name.size() < 2 || name.front() != 'p') return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return true;
}

RegistryPtr ansatz_registry(const RegistryPtr& base, unsigned s) {
  std::vector<Variable> vars;
  for (unsigned j = s; j-- > 0;) vars.push_back({unknown_name(j), Block::Ansatz});
  for (const auto& v : base->variables()) {
    if (v.block == Block::Ansatz) throw UsageError("base registry already has ansatz unknowns");
    if (v.block == Block::Parameter && is_reserved_name(v.name))
      throw UsageError("parameter name '" + v.name + "' is reserved");
    vars.push_back(v);
  }
  return make_registry(std::move(vars));
}

XPoly ansatz_polynomial(const RegistryPtr& registry, unsigned s) {
  std::vector<MultiPoly> coeffs;
  for (unsigned j = 0; j < s; ++j) coeffs.push_back(MultiPoly::variable(registry, unknown_name(j)));
  coeffs.push_back(MultiPoly::constant(registry, 1));
  return XPoly(registry, std::move(coeffs));
}

XPoly ansatz_residual(const AuxiliaryODE& ode, unsigned s) {
  const auto reg = ansatz_registry(ode.a1.registry(), s);
  const XPoly p = ansatz_polynomial(reg, s);
  const XPoly dp = p.derivative();
  return dp.derivative() + ode.a1.embed(reg) * dp + ode.a0.embed(reg) * p;
}

AnsatzSystem build_system(const XPoly& residual, std::span<const QuantizationConstraint> constraints,
                          unsigned s, unsigned n) {
  const auto& reg = residual.registry();
  AnsatzSystem sys;
  sys.s = s;
  sys.registry = reg;
  for (unsigned j = s; j-- > 0;) sys.unknowns.push_back(unknown_name(j));

  if (residual.degree() && *residual.degree() > s + n - 1)
    throw InternalError("ansatz residual exceeds degree s+n-1");

  const MultiPoly top = residual.coeff(s + n - 1);
  for (const auto& qc : constraints) {
    const MultiPoly q = qc.polynomial.embed(reg);
    bool cancelled = false;
    if (q.is_zero()) {
      cancelled = top.is_zero();
    } else if (!top.is_zero() && top.term_count() == q.term_count()) {
      const Rational ratio = top.leading_term().coeff / q.leading_term().coeff;
      cancelled = (top - q * ratio).is_zero();
    }
    if (!cancelled)
      throw InternalError("leading x^" + std::to_string(s + n - 1) + " coefficient '" + top.to_string() +
                          "' is not cancelled by the quantization constraint '" + q.to_string() + "'");
  }

  for (const auto& [k, c] : x_coefficients(residual)) sys.generators.push_back(c);
  sys.coefficient_generators = sys.generators.size();
  for (const auto& qc : constraints)
    if (qc.parameterized()) sys.generators.push_back(qc.polynomial.embed(reg));
  return sys;
}

}  // namespace qes
