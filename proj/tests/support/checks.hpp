#pragma once

#include "qes/characterization.hpp"
#include "qes/groebner.hpp"
#include "qes/problem.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qes::testing {

// First violated property of a reduced basis for gens, if any: Buchberger
// criterion, membership of every generator, reducedness, normalization and
// ascending order.
std::optional<std::string> groebner_violation(const std::vector<MultiPoly>& gens, const GroebnerBasis& basis);

// Over the lowest-priority 1..4 variables of reg: at most 5 generators of
// total degree at most 3 with small integer coefficients.
std::vector<MultiPoly> random_ideal(std::mt19937& rng, const RegistryPtr& reg);

// Registry p1 > p0 > lambda > mu used for random ideals.
RegistryPtr random_ideal_registry();

struct CorpusCase {
  std::string name;
  ProblemSpec spec;
  BranchSign sign;
  unsigned s;
};

// Every (sign, s) case of the built-in potentials.
std::vector<CorpusCase> corpus_cases();

// Cases whose parameters are all numeric, with s <= 6.
std::vector<CorpusCase> numeric_cases();

// Compares the pipeline's spectral polynomial against the determinant oracle:
// T divides the gcd of maximal minors and both have the same roots. A unit
// basis must correspond to a constant gcd.
std::optional<std::string> oracle_violation(const CorpusCase& c);

}  // namespace qes::testing
