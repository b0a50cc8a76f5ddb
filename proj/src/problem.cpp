#include "qes/problem.hpp"

#include "qes/ansatz.hpp"
#include "qes/errors.hpp"
#include "qes/parser.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace qes {
namespace {

std::string trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (offset) *offset = b;
  return std::string(s.substr(b, e - b));
}

std::vector<Variable> registry_variables(const std::vector<ParameterBinding>& params, bool free_only) {
  std::vector<Variable> vars{{std::string(kEigenvalueName), Block::Eigenvalue}};
  for (const auto& p : params)
    if (!free_only || !p.value) vars.push_back({p.name, Block::Parameter});
  return vars;
}

XPoly parse_potential(const std::string& text, const RegistryPtr& reg, int line, int column) {
  try {
    return parse_xpoly(text, reg, line);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), line, column + e.column() - 1);
  }
}

}  // namespace

ProblemSpec parse_problem_text(std::string_view text) {
  ProblemSpec spec;
  std::set<std::string> seen;
  std::set<std::string> declared;
  int potential_line = 0, potential_column = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string content = raw.substr(0, hash);
    std::size_t lead = 0;
    if (trim(content, &lead).empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line, static_cast<int>(lead) + 1);
    const std::string key = trim(std::string_view(content).substr(0, eq));
    std::size_t voff = 0;
    const std::string value = trim(std::string_view(content).substr(eq + 1), &voff);
    const int key_col = static_cast<int>(lead) + 1;
    const int value_col = static_cast<int>(eq + 1 + voff) + 1;
    if (!seen.insert(key).second) throw ParseError("duplicate key '" + key + "'", line, key_col);
    if (value.empty()) throw ParseError("missing value for '" + key + "'", line, value_col);

    if (key == "potential") {
      spec.potential = value;
      potential_line = line;
      potential_column = value_col;
    } else if (key.rfind("param.", 0) == 0) {
      const std::string name = key.substr(6);
      if (!is_identifier(name)) throw ParseError("invalid parameter name '" + name + "'", line, key_col + 6);
      if (is_reserved_name(name))
        throw ParseError("'" + name + "' is reserved and cannot be a parameter", line, key_col + 6);
      ParameterBinding b{name, std::nullopt};
      if (value != "free") {
        try {
          b.value = parse_rational(value);
        } catch (const UsageError&) {
          throw ParseError("parameter value must be a rational number or 'free'", line, value_col);
        }
      }
      declared.insert(name);
      spec.parameters.push_back(b);
    } else if (key == "s_max") {
      if (value.find_first_not_of("0123456789") != std::string::npos || value.size() > 4)
        throw ParseError("s_max must be a non-negative integer below 10000", line, value_col);
      spec.s_max = static_cast<unsigned>(std::stoul(value));
    } else if (key == "signs") {
      spec.signs.clear();
      if (value == "both") {
        spec.signs = {BranchSign::Plus, BranchSign::Minus};
      } else {
        std::stringstream parts(value);
        std::string part;
        while (std::getline(parts, part, ',')) {
          try {
            const auto sgn = parse_branch_sign(trim(part));
            if (std::find(spec.signs.begin(), spec.signs.end(), sgn) == spec.signs.end()) spec.signs.push_back(sgn);
          } catch (const UsageError&) {
            throw ParseError("signs must be plus, minus or both", line, value_col);
          }
        }
        std::sort(spec.signs.begin(), spec.signs.end());
      }
    } else if (key == "tolerance") {
      Real t;
      try {
        t = Real(value);
      } catch (const std::exception&) {
        throw ParseError("tolerance must be a decimal number", line, value_col);
      }
      if (!(t > 0) || t >= 1) throw ParseError("tolerance must lie in (0, 1)", line, value_col);
      spec.tolerance = value;
    } else if (key == "precision") {
      if (value.find_first_not_of("0123456789") != std::string::npos || value.size() > 3)
        throw ParseError("precision must be an integer between 5 and 90", line, value_col);
      const int p = std::stoi(value);
      if (p < 5 || p > 90) throw ParseError("precision must be an integer between 5 and 90", line, value_col);
      spec.precision = p;
    } else {
      throw ParseError("unknown key '" + key + "'", line, key_col);
    }
  }
  if (spec.potential.empty()) throw ParseError("missing 'potential'", line + 1, 1);

  std::vector<std::string> names;
  try {
    names = collect_identifiers(spec.potential, potential_line);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), potential_line, potential_column + e.column() - 1);
  }
  for (const auto& name : names) {
    if (is_reserved_name(name)) {
      const auto pos = spec.potential.find(name);
      throw ParseError("'" + name + "' is reserved and cannot appear in the potential", potential_line,
                       potential_column + static_cast<int>(pos));
    }
    if (declared.insert(name).second) spec.parameters.push_back({name, std::nullopt});
  }

  // Monic check on the bound potential.
  const auto full = make_registry(registry_variables(spec.parameters, false));
  XPoly v = parse_potential(spec.potential, full, potential_line, potential_column);
  for (const auto& p : spec.parameters)
    if (p.value) v = v.substitute(full->index_of(p.name), MultiPoly::constant(full, *p.value));
  if (v.degree() && *v.degree() > 0) {
    const MultiPoly lead = v.coeff(*v.degree());
    if (!lead.is_constant() || *lead.constant_value() != 1)
      throw ParseError("potential must be monic; leading coefficient is " + lead.to_string(), potential_line,
                       potential_column);
  }
  return spec;
}

ProblemSpec parse_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read problem file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

PreparedProblem prepare(const ProblemSpec& spec) {
  const auto full = make_registry(registry_variables(spec.parameters, false));
  const auto reduced = make_registry(registry_variables(spec.parameters, true));
  XPoly v = parse_xpoly(spec.potential, full);
  for (const auto& p : spec.parameters)
    if (p.value) v = v.substitute(full->index_of(p.name), MultiPoly::constant(full, *p.value));
  v = v.embed(reduced);
  return {reduced, v, parity_guard(v)};
}

}  // namespace qes
