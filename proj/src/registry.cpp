#include "qes/registry.hpp"

#include "qes/errors.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace qes {

std::string_view to_string(Block block) {
  switch (block) {
    case Block::Ansatz: return "ansatz";
    case Block::Eigenvalue: return "eigenvalue";
    case Block::Parameter: return "parameter";
  }
  return "?";
}

bool is_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

VarRegistry::VarRegistry(std::vector<Variable> variables) : variables_(std::move(variables)) {
  std::unordered_set<std::string> seen;
  int eigen_count = 0;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const auto& v = variables_[i];
    if (!is_identifier(v.name)) throw UsageError("invalid variable name '" + v.name + "'");
    if (v.name == kSpatialVariable) throw UsageError("'x' is reserved for the spatial variable");
    if (!seen.insert(v.name).second) throw UsageError("duplicate variable '" + v.name + "'");
    if (i > 0 && variables_[i - 1].block > v.block)
      throw UsageError("registry must list ansatz, eigenvalue, parameter blocks in that order");
    if (v.block == Block::Eigenvalue) ++eigen_count;
  }
  if (eigen_count > 1) throw UsageError("at most one eigenvalue variable");
}

std::optional<std::size_t> VarRegistry::find(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i].name == name) return i;
  return std::nullopt;
}

std::size_t VarRegistry::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UsageError("unknown variable '" + std::string(name) + "'");
}

std::optional<std::size_t> VarRegistry::eigenvalue() const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i].block == Block::Eigenvalue) return i;
  return std::nullopt;
}

std::vector<std::size_t> VarRegistry::indices_in(Block block) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i].block == block) out.push_back(i);
  return out;
}

RegistryPtr make_registry(std::vector<Variable> variables) {
  return std::make_shared<const VarRegistry>(std::move(variables));
}

bool same_registry(const RegistryPtr& a, const RegistryPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exponents) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0 && other.exponents[i] != 0) return false;
  return true;
}

std::optional<std::size_t> Monomial::leading_variable() const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0) return i;
  return std::nullopt;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) throw InternalError("monomial division is not exact");
    r[i] = a[i] - b[i];
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

}  // namespace qes
