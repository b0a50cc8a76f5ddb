#include "support/checks.hpp"

#include "support/fixtures.hpp"
#include "support/oracle.hpp"

#include "qes/corpus.hpp"
#include "qes/spectral.hpp"

#include <algorithm>

namespace qes::testing {

std::optional<std::string> groebner_violation(const std::vector<MultiPoly>& gens, const GroebnerBasis& basis) {
  const auto& el = basis.elements();
  const auto& order = basis.order();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j)
      if (!normal_form(s_polynomial(el[i], el[j], order), el, order).is_zero())
        return "S-polynomial of " + el[i].to_string() + " and " + el[j].to_string() + " does not reduce to 0";
  for (const auto& f : gens)
    if (!normal_form(f, el, order).is_zero()) return "generator " + f.to_string() + " does not reduce to 0";
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (content_normalize(el[i]) != el[i]) return "element " + el[i].to_string() + " is not normalized";
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (i == j) continue;
      const auto& lm = leading_term(el[j], order).monomial;
      for (const auto& t : el[i].terms()) {
        bool divisible = true;
        for (std::size_t k = 0; k < lm.size(); ++k) divisible = divisible && t.monomial[k] >= lm[k];
        if (divisible) return "element " + el[i].to_string() + " is reducible by " + el[j].to_string();
      }
    }
    if (i > 0 && order.compare(leading_term(el[i - 1], order).monomial, leading_term(el[i], order).monomial) !=
                     std::strong_ordering::less)
      return "basis is not sorted by leading monomial";
  }
  return std::nullopt;
}

RegistryPtr random_ideal_registry() {
  return registry_of({{"p1", Block::Ansatz}, {"p0", Block::Ansatz}, {"lambda", Block::Eigenvalue}, {"mu", Block::Parameter}});
}

std::vector<MultiPoly> random_ideal(std::mt19937& rng, const RegistryPtr& reg) {
  std::uniform_int_distribution<int> nvars(1, 4), ngens(1, 5), nterms(1, 4), deg(0, 3), coeff(-4, 4);
  const std::size_t first = reg->size() - static_cast<std::size_t>(nvars(rng));
  std::vector<MultiPoly> gens;
  const int m = ngens(rng);
  for (int g = 0; g < m; ++g) {
    MultiPoly f(reg);
    const int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
      Monomial mono;
      mono.exponents.assign(reg->size(), 0);
      int budget = deg(rng);
      for (std::size_t v = first; v < reg->size() && budget > 0; ++v) {
        const int e = std::uniform_int_distribution<int>(0, budget)(rng);
        mono.exponents[v] = static_cast<std::uint32_t>(e);
        budget -= e;
      }
      const int c = coeff(rng);
      f += MultiPoly::from_terms(reg, {{mono, Rational(c == 0 ? 1 : c)}});
    }
    gens.push_back(f);
  }
  return gens;
}

std::vector<CorpusCase> corpus_cases() {
  std::vector<CorpusCase> out;
  const auto both = [&](const std::string& name, const ProblemSpec& spec, unsigned from, unsigned to) {
    for (const auto sign : {BranchSign::Plus, BranchSign::Minus})
      for (unsigned s = from; s <= to; ++s) out.push_back({name, spec, sign, s});
  };
  both("quartic", corpus::quartic(), 0, 5);
  for (unsigned s = 0; s <= 5; ++s) {
    out.push_back({"quartic", corpus::quartic(Rational(2 - 2 * static_cast<long>(s))), BranchSign::Plus, s});
    out.push_back({"quartic", corpus::quartic(Rational(6 + 2 * static_cast<long>(s))), BranchSign::Minus, s});
  }
  for (unsigned s = 0; s <= 10; s += 2) out.push_back({"sextic", corpus::sextic_first(s), BranchSign::Minus, s});
  for (unsigned s = 1; s <= 9; s += 2) out.push_back({"sextic", corpus::sextic_second(s), BranchSign::Minus, s});
  both("octic", corpus::octic(), 0, 5);
  both("decatic", corpus::decatic(), 0, 3);
  both("dodecatic", corpus::dodecatic(), 0, 4);
  both("tetrakaidecatic", corpus::tetrakaidecatic(), 0, 4);
  both("harmonic", corpus::harmonic(), 0, 10);
  return out;
}

std::vector<CorpusCase> numeric_cases() {
  std::vector<CorpusCase> out;
  for (const auto& c : corpus_cases()) {
    const bool numeric = std::all_of(c.spec.parameters.begin(), c.spec.parameters.end(),
                                     [](const ParameterBinding& p) { return p.value.has_value(); });
    if (numeric && c.s <= 6) out.push_back(c);
  }
  // Octic and dodecatic members with the parameters pinned at integrable values.
  const auto octic = [](long mu, long delta) {
    auto spec = corpus::octic();
    spec.parameters = {{"mu", Rational(mu)}, {"delta", Rational(delta)}};
    return spec;
  };
  for (unsigned s = 0; s <= 5; ++s) {
    out.push_back({"octic", octic(2 * static_cast<long>(s) + 4, -2), BranchSign::Plus, s});
    out.push_back({"octic", octic(-2 * static_cast<long>(s) - 4, -2), BranchSign::Minus, s});
  }
  out.push_back({"octic", octic(4, 3), BranchSign::Plus, 0});
  auto dodecatic = corpus::dodecatic();
  dodecatic.parameters = {{"mu", Rational(6)}, {"kappa", Rational(3)}};
  out.push_back({"dodecatic", dodecatic, BranchSign::Plus, 0});
  return out;
}

std::optional<std::string> oracle_violation(const CorpusCase& c) {
  const auto problem = prepare(c.spec);
  oracle::Dense v;
  for (const auto& coeff : problem.potential.coefficients()) {
    const auto value = coeff.constant_value();
    if (!value) return "potential has symbolic coefficients";
    v.push_back(*value);
  }
  const auto gcd = oracle::minors_gcd(v, sign_value(c.sign), c.s);

  const auto cs = case_system(c.spec, c.sign, c.s);
  oracle::Dense t;
  if (!cs.system) {
    t = {1};
  } else {
    const auto g = buchberger_reduced(cs.system->generators, MonomialOrder::block_lex(cs.system->registry));
    if (g.is_unit()) {
      t = {1};
    } else {
      const auto r = spectral_extract(g, c.s);
      if (r.t_polynomials.size() != 1) return "expected a single spectral polynomial";
      const auto& reg = g.order().registry();
      const std::size_t lam = *reg->eigenvalue();
      const auto& tp = r.t_polynomials[0];
      t.assign(tp.degree_in(lam) + 1, 0);
      for (const auto& term : tp.terms()) {
        for (std::size_t i = 0; i < term.monomial.size(); ++i)
          if (i != lam && term.monomial[i] != 0) return "spectral polynomial is not univariate";
        t[term.monomial[lam]] = term.coeff;
      }
    }
  }
  const auto describe = [](const oracle::Dense& f) {
    std::string out;
    for (std::size_t k = f.size(); k-- > 0;) out += (k + 1 == f.size() ? "" : " ") + f[k].get_str() + "*t^" + std::to_string(k);
    return out.empty() ? std::string("0") : out;
  };
  if (gcd.empty()) return "all maximal minors vanish identically";
  if (!oracle::divides(t, gcd)) return "T = " + describe(t) + " does not divide the minors gcd " + describe(gcd);
  // Minors vanish for every solution of degree at most s; drop the eigenvalues
  // already reached at lower degree. A fixed eigenvalue admits one degree only.
  auto exact = oracle::square_free(gcd);
  if (c.s > 0) {
    const auto lower = oracle::minors_gcd(v, sign_value(c.sign), c.s - 1);
    if (!lower.empty()) {
      const auto common = oracle::gcd(exact, oracle::square_free(lower));
      if (common.size() > 1) exact = oracle::monic(oracle::quotient(exact, common));
    }
  }
  if (oracle::square_free(t) != exact)
    return "root sets differ: T = " + describe(t) + ", degree-s part of minors gcd " + describe(exact);
  return std::nullopt;
}

}  // namespace qes::testing
