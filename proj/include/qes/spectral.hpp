#pragma once

#include "qes/characterization.hpp"
#include "qes/groebner.hpp"
#include "qes/roots.hpp"
#include "qes/xpoly.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qes {

enum class Verdict { Integrable, NotIntegrable, Unconstrained };

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

// A solved coordinate: a polynomial in the free variables, or a number.
class Value {
 public:
  explicit Value(MultiPoly symbolic) : v_(std::move(symbolic)) {}
  explicit Value(Scalar scalar) : v_(std::move(scalar)) {}

  bool is_symbolic() const { return std::holds_alternative<MultiPoly>(v_); }
  const MultiPoly& symbolic() const;
  const Scalar& scalar() const;
  std::optional<Rational> rational() const;
  bool is_real() const;

  std::string to_string(int digits) const;

 private:
  std::variant<MultiPoly, Scalar> v_;
};

// One value per registry variable. A free variable maps to itself. Values are
// either all symbolic or all Scalar.
struct Solution {
  RegistryPtr registry;
  std::vector<Value> values;

  bool is_numeric() const;
  bool is_free(std::size_t var) const;
};

enum class BoundState { Bound, NotBound, Indeterminate };

std::string_view to_string(BoundState b);

struct Eigenpair {
  BranchSign sign = BranchSign::Plus;
  unsigned s = 0;
  unsigned n = 0;
  Solution solution;
  BoundState bound_state = BoundState::Indeterminate;

  const Value& lambda() const;
  // Index = degree; the entry for x^s is 1.
  std::vector<Value> p_coefficients() const;
  // Parameter variables of the registry in order.
  std::vector<std::size_t> parameters() const;
};

struct SolveOptions {
  Real tolerance{"1e-10"};
};

struct SpectralResult {
  Verdict verdict = Verdict::Unconstrained;
  // Elimination ideal in {lambda} and parameters, split by whether lambda occurs.
  std::vector<MultiPoly> t_polynomials;
  std::vector<MultiPoly> param_constraints;
  // Roots of T when T is a single polynomial in lambda alone.
  std::vector<Eigenvalue> eigenvalues;
  std::vector<Eigenpair> eigenpairs;
  // P with coefficients over lambda and the parameters, when every unknown is
  // pinned linearly by the basis.
  std::optional<XPoly> general_p;
  std::vector<std::string> notes;
};

// Verdict, T, parameter constraints, roots of T and the general P.
SpectralResult spectral_extract(const GroebnerBasis& g, unsigned s, const SolveOptions& options = {});

// Solves the triangular lex basis from the lowest-priority variable upward,
// starting from the values fixed in `fixed` (nullopt entries are solved).
// Branches that cannot be resolved are dropped with a note.
std::vector<Solution> solve_triangular(const GroebnerBasis& g, const std::vector<std::optional<Value>>& fixed,
                                       const SolveOptions& options, std::vector<std::string>* notes = nullptr);

// The ansatz coefficients for a given assignment of lambda and parameters; one
// entry per solution. Throws PreconditionError when the assignment is
// inconsistent with the basis.
std::vector<std::vector<Value>> back_substitute(const GroebnerBasis& g, const std::vector<std::optional<Value>>& fixed,
                                                const SolveOptions& options = {});

struct ResidualReport {
  bool exact = false;
  bool zero = false;
  // Exact residual polynomial text, or the worst relative residual.
  std::string text;
  Real relative{0};
};

// R = P'' + A1 P' + A0 P for the pair, with v the potential over a registry
// holding lambda.
ResidualReport compute_residual(const XPoly& v, const Eigenpair& pair, const Real& tolerance = Real("1e-10"));
// Throws VerificationError unless the residual vanishes (exactly, or within
// tolerance for numeric pairs).
ResidualReport verify_eigenpair(const XPoly& v, const Eigenpair& pair, const Real& tolerance = Real("1e-10"));

BoundState classify_state(const Eigenpair& pair);

// Extraction plus eigenpair assembly, classification and verification.
SpectralResult analyse(const GroebnerBasis& g, const XPoly& v, BranchSign sign, unsigned s, unsigned n,
                       const SolveOptions& options = {});

// x-polynomial text for coefficient values indexed by degree.
std::string polynomial_text(const std::vector<Value>& coeffs, const RegistryPtr& registry, int digits);
// Coefficients of +-f for the pair (the exponent of psi = P e^{+-f}).
std::vector<Value> exponent_values(const XPoly& v, const Eigenpair& pair);

}  // namespace qes
