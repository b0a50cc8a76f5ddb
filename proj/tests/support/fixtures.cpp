#include "support/fixtures.hpp"

namespace qes::testing {

RegistryPtr registry_of(std::initializer_list<std::pair<const char*, Block>> vars) {
  std::vector<Variable> v;
  for (const auto& [name, block] : vars) v.push_back({name, block});
  return make_registry(std::move(v));
}

RegistryPtr base_registry(std::initializer_list<const char*> params) {
  std::vector<Variable> v{{"lambda", Block::Eigenvalue}};
  for (const auto* p : params) v.push_back({p, Block::Parameter});
  return make_registry(std::move(v));
}

MultiPoly mp(const std::string& text, const RegistryPtr& reg) { return parse_multipoly(text, reg); }
XPoly xp(const std::string& text, const RegistryPtr& reg) { return parse_xpoly(text, reg); }

CaseSystem case_system(const ProblemSpec& spec, BranchSign sign, unsigned s) {
  auto problem = prepare(spec);
  const unsigned n = problem.parity.n;
  auto sf = shift_by_lambda(complete_square(problem.potential, n));
  auto ode = auxiliary_ode(sf, sign);
  auto residual = ansatz_residual(ode, s);
  CaseSystem cs{std::move(problem), sf, ode, residual, quantization(sf, s, sign), std::nullopt};
  if (cs.quantization) cs.system = build_system(cs.residual, std::span(&*cs.quantization, 1), s, n);
  return cs;
}

std::optional<GroebnerBasis> case_basis(const ProblemSpec& spec, BranchSign sign, unsigned s) {
  const auto cs = case_system(spec, sign, s);
  if (!cs.system) return std::nullopt;
  return buchberger_reduced(cs.system->generators, MonomialOrder::block_lex(cs.system->registry));
}

ProblemSpec spec_of(const std::string& text) { return parse_problem_text(text); }

}  // namespace qes::testing
