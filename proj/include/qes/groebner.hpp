#pragma once

#include "qes/multipoly.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qes {

// Pure lex order along a priority permutation of the registry. The permutation
// must list every ansatz variable before the eigenvalue and the eigenvalue
// before every parameter.
class MonomialOrder {
 public:
  MonomialOrder(RegistryPtr registry, std::vector<std::size_t> priority);
  // Registry order as priority.
  static MonomialOrder block_lex(RegistryPtr registry);

  const RegistryPtr& registry() const { return registry_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  bool is_identity() const { return identity_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  // "lex: p1 > p0 > lambda > mu"
  std::string describe() const;

 private:
  RegistryPtr registry_;
  std::vector<std::size_t> priority_;
  bool identity_ = true;
};

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b, const MonomialOrder& order);

struct GroebnerBudget {
  std::uint64_t max_pairs = 1'000'000;
  std::size_t max_terms = 250'000;

  // Defaults, with QES_BUDGET_PAIRS overriding max_pairs when set.
  static GroebnerBudget from_environment();
};

struct GroebnerStats {
  std::uint64_t pairs_created = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t pruned_pairs = 0;
  std::size_t peak_basis = 0;
};

class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, std::vector<MultiPoly> elements, GroebnerStats stats = {});

  const MonomialOrder& order() const { return order_; }
  // Content-normalized, ascending by leading monomial.
  const std::vector<MultiPoly>& elements() const { return elements_; }
  const GroebnerStats& stats() const { return stats_; }

  bool is_unit() const;
  bool is_zero_ideal() const { return elements_.empty(); }

  // Header line naming the order, then one element per line.
  std::string dump() const;

 private:
  MonomialOrder order_;
  std::vector<MultiPoly> elements_;
  GroebnerStats stats_;
};

// Leading term under an arbitrary order.
const Term& leading_term(const MultiPoly& f, const MonomialOrder& order);

// Remainder of f on division by divisors: no monomial of the result is
// divisible by any leading term of divisors.
MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> divisors, const MonomialOrder& order);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order);

// Reduced Gröbner basis of the ideal generated by generators. Zero inputs are
// dropped; an all-zero input yields the empty basis of the zero ideal; the unit
// ideal yields {1}. The result is checked against Buchberger's criterion and
// input membership before it is returned. Throws BudgetError.
GroebnerBasis buchberger_reduced(std::span<const MultiPoly> generators, const MonomialOrder& order,
                                 const GroebnerBudget& budget = GroebnerBudget::from_environment());

// Every S-polynomial of the set reduces to zero modulo the set.
bool satisfies_buchberger_criterion(std::span<const MultiPoly> basis, const MonomialOrder& order);

// Basis elements involving only variables of the kept blocks. The kept
// variables must be the lowest-priority segment of the order; UsageError otherwise.
std::vector<MultiPoly> eliminate(const GroebnerBasis& basis, std::span<const Block> keep);

}  // namespace qes
