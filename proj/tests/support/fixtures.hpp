#pragma once

#include "qes/ansatz.hpp"
#include "qes/characterization.hpp"
#include "qes/groebner.hpp"
#include "qes/parser.hpp"
#include "qes/problem.hpp"
#include "qes/spectral.hpp"
#include "qes/square_form.hpp"

#include <optional>
#include <string>

namespace qes::testing {

RegistryPtr registry_of(std::initializer_list<std::pair<const char*, Block>> vars);
// lambda plus the listed parameters.
RegistryPtr base_registry(std::initializer_list<const char*> params = {});

MultiPoly mp(const std::string& text, const RegistryPtr& reg);
XPoly xp(const std::string& text, const RegistryPtr& reg);

struct CaseSystem {
  PreparedProblem problem;
  SquareForm sf_lambda;
  AuxiliaryODE ode;
  XPoly residual;
  std::optional<QuantizationConstraint> quantization;
  // Empty when the quantization constraint is a nonzero constant.
  std::optional<AnsatzSystem> system;
};

CaseSystem case_system(const ProblemSpec& spec, BranchSign sign, unsigned s);
// Reduced basis of the case, or nullopt when quantization already fails.
std::optional<GroebnerBasis> case_basis(const ProblemSpec& spec, BranchSign sign, unsigned s);

ProblemSpec spec_of(const std::string& text);

}  // namespace qes::testing
