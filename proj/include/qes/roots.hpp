#pragma once

#include "qes/multipoly.hpp"
#include "qes/scalar.hpp"

#include <vector>

namespace qes {

// Dense univariate polynomial over Q, entry k multiplies t^k.
using UPoly = std::vector<Rational>;

UPoly upoly_from(const MultiPoly& t, std::size_t var);
std::optional<unsigned> upoly_degree(const UPoly& f);
UPoly upoly_derivative(const UPoly& f);
// f = q g + r.
void upoly_divmod(const UPoly& f, const UPoly& g, UPoly& q, UPoly& r);
// Monic gcd; gcd(0, 0) = 0.
UPoly upoly_gcd(const UPoly& f, const UPoly& g);
Rational upoly_eval(const UPoly& f, const Rational& t);

// Yun's algorithm: f = lc * prod factors[i]^(i+1) with square-free, pairwise
// coprime monic factors (some possibly constant 1).
std::vector<UPoly> square_free_decomposition(const UPoly& f);

struct Eigenvalue {
  Scalar value;
  // |T(approx)| / ||T||_1 rounded up; zero for exact roots.
  Rational residual_bound;
  unsigned multiplicity = 1;
};

// All complex roots of f (numeric complex coefficients) by Aberth iteration.
std::vector<Complex> aberth(const std::vector<Complex>& coeffs);

// Inclusion disks n |f(z_i)| / |lc prod_{j != i} (z_i - z_j)| are pairwise
// disjoint and lie within the Cauchy bound, so each holds exactly one root.
// Radii of the disks, or nullopt when the check fails.
std::optional<std::vector<Real>> inclusion_radii(const std::vector<Complex>& coeffs, const std::vector<Complex>& approx);
bool certify_roots(const std::vector<Complex>& coeffs, const std::vector<Complex>& approx);

// Distinct roots of f with multiplicities, sorted by real then imaginary part.
// Rational roots and the roots of a leftover factor of degree <= 2 are exact;
// everything else is certified numeric. Degree 0 gives the empty list.
// Throws VerificationError when certification fails or a residual bound
// exceeds tolerance.
std::vector<Eigenvalue> roots(const UPoly& f, const Real& tolerance = Real("1e-10"));
std::vector<Eigenvalue> roots(const MultiPoly& t, std::size_t var, const Real& tolerance = Real("1e-10"));

}  // namespace qes
