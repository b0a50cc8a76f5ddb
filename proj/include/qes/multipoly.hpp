#pragma once

#include "qes/rational.hpp"
#include "qes/registry.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qes {

struct Term {
  Monomial monomial;
  Rational coeff;

  bool operator==(const Term&) const = default;
};

// Sparse polynomial over Q in the variables of a registry. Terms are kept in
// strictly decreasing lex order (the registry order) with no zero coefficient,
// so structural equality is mathematical equality.
class MultiPoly {
 public:
  explicit MultiPoly(RegistryPtr registry);

  static MultiPoly constant(RegistryPtr registry, const Rational& c);
  static MultiPoly variable(RegistryPtr registry, std::string_view name);
  static MultiPoly variable(RegistryPtr registry, std::size_t index);
  static MultiPoly from_terms(RegistryPtr registry, std::vector<Term> terms);

  const RegistryPtr& registry() const { return registry_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;
  const Term& leading_term() const;
  std::size_t degree_in(std::size_t var) const;
  std::uint64_t total_degree() const;
  bool depends_on(std::size_t var) const;
  // Index of the highest-priority variable present, if any.
  std::optional<std::size_t> leading_variable() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& g);
  MultiPoly& operator-=(const MultiPoly& g);
  MultiPoly& operator*=(const MultiPoly& g);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly f, const MultiPoly& g) { return f += g; }
  friend MultiPoly operator-(MultiPoly f, const MultiPoly& g) { return f -= g; }
  friend MultiPoly operator*(MultiPoly f, const MultiPoly& g) { return f *= g; }
  friend MultiPoly operator*(MultiPoly f, const Rational& c) { return f *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly f) { return f *= c; }

  MultiPoly derivative(std::size_t var) const;
  MultiPoly derivative(std::string_view var) const;
  MultiPoly pow(unsigned e) const;
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  // Entry k is the coefficient of var^k; none of the entries contain var.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  // Rewrites the polynomial over another registry, matching variables by name.
  MultiPoly embed(const RegistryPtr& target) const;

  std::string to_string() const;

  bool operator==(const MultiPoly& other) const;

 private:
  void require_same(const MultiPoly& g) const;

  RegistryPtr registry_;
  std::vector<Term> terms_;
};

enum class ArithKind { Add, Sub, Mul, Neg };

// Ring operation dispatcher; Neg ignores g. Registry mismatch is a UsageError.
MultiPoly mp_arith(ArithKind kind, const MultiPoly& f, const MultiPoly& g);
MultiPoly mp_derivative(const MultiPoly& f, std::string_view var);

// Integer-primitive multiple of f with positive leading coefficient. f must be
// nonzero (PreconditionError).
MultiPoly content_normalize(const MultiPoly& f);

std::string monomial_to_string(const Monomial& m, const VarRegistry& registry);
// Coefficient text for a term: "", "-", "3*", "-1/2*" or the bare number when the
// monomial is one.
std::string render_terms(const std::vector<Term>& terms, const VarRegistry& registry);

// Evaluates f at values[i] for variable i. F must be constructible from Rational
// and support + and *.
template <class F>
F evaluate(const MultiPoly& f, std::span<const F> values) {
  F total(Rational(0));
  for (const auto& t : f.terms()) {
    F term(t.coeff);
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      for (std::uint32_t k = 0; k < t.monomial[i]; ++k) term = term * values[i];
    total = total + term;
  }
  return total;
}

}  // namespace qes
