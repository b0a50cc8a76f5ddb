#pragma once

#include "qes/characterization.hpp"
#include "qes/scalar.hpp"
#include "qes/xpoly.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace qes {

struct ParameterBinding {
  std::string name;
  // nullopt: free.
  std::optional<Rational> value;

  bool operator==(const ParameterBinding&) const = default;
};

// Contents of a problem file:
//
//   # comment
//   potential = x^4 + 4*x^3 + 2*x^2 - mu*x
//   param.mu = free
//   s_max = 5
//   signs = both            (plus, minus, both, or "plus,minus")
//   tolerance = 1e-10
//   precision = 50
//
// Names used in the potential without a param line are free parameters,
// ordered after the declared ones by first appearance.
struct ProblemSpec {
  std::string potential;
  std::vector<ParameterBinding> parameters;
  unsigned s_max = 10;
  std::vector<BranchSign> signs{BranchSign::Plus, BranchSign::Minus};
  std::string tolerance = "1e-10";
  int precision = 50;

  Real tolerance_value() const { return Real(tolerance); }
  bool operator==(const ProblemSpec&) const = default;
};

// Throws ParseError (line, column) for malformed or invalid input.
ProblemSpec parse_problem_text(std::string_view text);
// Throws UsageError when the file cannot be read.
ProblemSpec parse_problem(const std::filesystem::path& path);

// The potential over a registry of lambda and the free parameters, with
// bound parameters substituted.
struct PreparedProblem {
  RegistryPtr registry;
  XPoly potential;
  ParityResult parity;
};

PreparedProblem prepare(const ProblemSpec& spec);

}  // namespace qes
