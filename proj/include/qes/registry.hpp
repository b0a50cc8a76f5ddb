#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qes {

inline constexpr std::string_view kSpatialVariable = "x";
inline constexpr std::string_view kEigenvalueName = "lambda";

// Variable blocks, listed from highest to lowest elimination priority.
enum class Block : std::uint8_t { Ansatz = 0, Eigenvalue = 1, Parameter = 2 };

std::string_view to_string(Block block);

struct Variable {
  std::string name;
  Block block;

  bool operator==(const Variable&) const = default;
};

// Ordered set of ring variables. The position of a variable is its priority
// in the block lex order: index 0 is the largest variable.
class VarRegistry {
 public:
  explicit VarRegistry(std::vector<Variable> variables);

  std::size_t size() const { return variables_.size(); }
  const Variable& operator[](std::size_t i) const { return variables_[i]; }
  const std::vector<Variable>& variables() const { return variables_; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws UsageError for unknown names.
  std::size_t index_of(std::string_view name) const;
  std::optional<std::size_t> eigenvalue() const;
  std::vector<std::size_t> indices_in(Block block) const;

  bool operator==(const VarRegistry& other) const { return variables_ == other.variables_; }

 private:
  std::vector<Variable> variables_;
};

using RegistryPtr = std::shared_ptr<const VarRegistry>;

RegistryPtr make_registry(std::vector<Variable> variables);
bool same_registry(const RegistryPtr& a, const RegistryPtr& b);
bool is_identifier(std::string_view name);

// Exponent vector indexed like the owning registry.
struct Monomial {
  std::vector<std::uint32_t> exponents;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

  std::size_t size() const { return exponents.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents[i]; }
  std::uint32_t& operator[](std::size_t i) { return exponents[i]; }

  std::uint64_t total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  // Index of the first variable with a nonzero exponent.
  std::optional<std::size_t> leading_variable() const;

  // Lex along index order, which is the registry priority order.
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
// Requires b | a.
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

}  // namespace qes
