#pragma once

#include "qes/characterization.hpp"

#include <span>
#include <string>
#include <vector>

namespace qes {

std::string unknown_name(unsigned j);
// x, lambda and the ansatz unknowns p0, p1, ...
bool is_reserved_name(std::string_view name);

// base with the unknowns p_{s-1} > ... > p_0 prepended as the ansatz block.
RegistryPtr ansatz_registry(const RegistryPtr& base, unsigned s);

// x^s + sum_{j<s} p_j x^j over an ansatz registry.
XPoly ansatz_polynomial(const RegistryPtr& registry, unsigned s);

// P'' + a1 P' + a0 P for the monic degree-s ansatz, over ansatz_registry(ode registry, s).
XPoly ansatz_residual(const AuxiliaryODE& ode, unsigned s);

struct AnsatzSystem {
  unsigned s = 0;
  RegistryPtr registry;
  // p_{s-1}, ..., p_0.
  std::vector<std::string> unknowns;
  // Nonzero x-coefficients (highest degree first), then parameterized constraints.
  std::vector<MultiPoly> generators;
  std::size_t coefficient_generators = 0;
};

// Throws InternalError when the x^{s+n-1} coefficient is not cancelled by the
// quantization constraints.
AnsatzSystem build_system(const XPoly& residual, std::span<const QuantizationConstraint> constraints,
                          unsigned s, unsigned n);

}  // namespace qes
