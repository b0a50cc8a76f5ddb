#include "support/fixtures.hpp"

#include "qes/corpus.hpp"
#include "qes/errors.hpp"

#include <gtest/gtest.h>

using namespace qes;
using namespace qes::testing;

namespace {

const std::string kQuartic = "potential = x^4+4*x^3+2*x^2-mu*x\n";

std::vector<std::string> texts(const std::vector<MultiPoly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

struct Analysed {
  CaseSystem cs;
  GroebnerBasis g;
  SpectralResult r;
};

Analysed analysed(const ProblemSpec& spec, BranchSign sign, unsigned s) {
  auto cs = case_system(spec, sign, s);
  auto g = buchberger_reduced(cs.system->generators, MonomialOrder::block_lex(cs.system->registry));
  auto r = analyse(g, cs.problem.potential, sign, s, cs.problem.parity.n);
  return {std::move(cs), std::move(g), std::move(r)};
}

std::vector<std::optional<Value>> assign_lambda(const GroebnerBasis& g, const Scalar& lambda) {
  const auto& reg = g.order().registry();
  std::vector<std::optional<Value>> fixed(reg->size());
  fixed[*reg->eigenvalue()] = Value(lambda);
  return fixed;
}

}  // namespace

TEST(Verdict, Names) {
  EXPECT_EQ(to_string(Verdict::NotIntegrable), "not integrable");
  EXPECT_EQ(parse_verdict("unconstrained"), Verdict::Unconstrained);
  EXPECT_THROW(parse_verdict("maybe"), UsageError);
  EXPECT_EQ(to_string(BoundState::Indeterminate), "indeterminate");
}

TEST(SpectralExtract, QuarticPlus) {
  const auto g = case_basis(spec_of(kQuartic + "param.mu = 0\n"), BranchSign::Plus, 1);
  const auto r = spectral_extract(*g, 1);
  EXPECT_EQ(r.verdict, Verdict::Integrable);
  EXPECT_EQ(texts(r.t_polynomials), std::vector<std::string>{"lambda^2 + 10*lambda + 17"});
  EXPECT_TRUE(r.param_constraints.empty());
  ASSERT_EQ(r.eigenvalues.size(), 2u);
  EXPECT_EQ(r.eigenvalues[0].value.to_string(20), "-5 - 2*sqrt(2)");
}

TEST(SpectralExtract, OcticNotIntegrable) {
  const auto g = case_basis(corpus::octic(), BranchSign::Plus, 2);
  EXPECT_TRUE(g->is_unit());
  EXPECT_EQ(spectral_extract(*g, 2).verdict, Verdict::NotIntegrable);
}

TEST(SpectralExtract, DecaticMinusFirstCase) {
  const auto g = case_basis(corpus::decatic(), BranchSign::Minus, 1);
  const auto r = spectral_extract(*g, 1);
  EXPECT_EQ(r.verdict, Verdict::Integrable);
  const auto m = texts(r.param_constraints);
  EXPECT_NE(std::find(m.begin(), m.end(), "64*epsilon - 169"), m.end());
  EXPECT_EQ(texts(r.t_polynomials), std::vector<std::string>{"8*lambda - 9"});
}

TEST(SpectralExtract, OcticGroundStateKeepsDeltaFree) {
  const auto g = case_basis(corpus::octic(), BranchSign::Plus, 0);
  const auto r = spectral_extract(*g, 0);
  EXPECT_EQ(r.verdict, Verdict::Integrable);
  EXPECT_EQ(texts(r.t_polynomials), std::vector<std::string>{"lambda"});
}

TEST(BackSubstitute, SexticSurd) {
  const auto g = case_basis(corpus::sextic_first(2), BranchSign::Minus, 2);
  const auto p = back_substitute(*g, assign_lambda(*g, Scalar(QuadSurd(0, -2, 2))));
  ASSERT_EQ(p.size(), 1u);
  ASSERT_EQ(p[0].size(), 3u);
  EXPECT_EQ(p[0][0].to_string(20), "1/2*sqrt(2)");
  EXPECT_EQ(p[0][1].to_string(20), "0");
  EXPECT_EQ(p[0][2].to_string(20), "1");
}

TEST(BackSubstitute, QuarticSurd) {
  const auto g = case_basis(spec_of(kQuartic + "param.mu = 0\n"), BranchSign::Plus, 1);
  const auto p = back_substitute(*g, assign_lambda(*g, Scalar(QuadSurd(-5, 2, 2))));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0][0].to_string(20), "1 + sqrt(2)");
  EXPECT_THROW(back_substitute(*g, assign_lambda(*g, Scalar(Rational(0)))), PreconditionError);
  const std::vector<std::optional<Value>> none(g->order().registry()->size());
  EXPECT_THROW(back_substitute(*g, none), PreconditionError);
}

TEST(BackSubstitute, DegreeZeroIsOne) {
  const auto g = case_basis(spec_of(kQuartic + "param.mu = 6\n"), BranchSign::Minus, 0);
  const auto p = back_substitute(*g, assign_lambda(*g, Scalar(Rational(1))));
  ASSERT_EQ(p.size(), 1u);
  ASSERT_EQ(p[0].size(), 1u);
  EXPECT_EQ(p[0][0].to_string(10), "1");
}

TEST(VerifyEigenpair, ExactPairsVanish) {
  const auto a = analysed(spec_of(kQuartic + "param.mu = 6\n"), BranchSign::Minus, 0);
  ASSERT_EQ(a.r.eigenpairs.size(), 1u);
  const auto rep = verify_eigenpair(a.cs.problem.potential, a.r.eigenpairs[0]);
  EXPECT_TRUE(rep.exact);
  EXPECT_TRUE(rep.zero);
  EXPECT_EQ(rep.text, "0");

  const auto b = analysed(corpus::sextic_first(2), BranchSign::Minus, 2);
  ASSERT_EQ(b.r.eigenpairs.size(), 2u);
  for (const auto& pair : b.r.eigenpairs) {
    EXPECT_TRUE(pair.lambda().scalar().is_exact());
    EXPECT_TRUE(verify_eigenpair(b.cs.problem.potential, pair).zero);
    EXPECT_EQ(pair.bound_state, BoundState::Bound);
  }
}

TEST(VerifyEigenpair, NegativeControlFails) {
  const auto spec = spec_of(kQuartic + "param.mu = 6\n");
  const auto problem = prepare(spec);
  Eigenpair pair;
  pair.sign = BranchSign::Minus;
  pair.s = 0;
  pair.n = 2;
  pair.solution.registry = ansatz_registry(problem.registry, 0);
  pair.solution.values = {Value(Scalar(Rational(0)))};
  const auto rep = compute_residual(problem.potential, pair);
  EXPECT_TRUE(rep.exact);
  EXPECT_FALSE(rep.zero);
  EXPECT_EQ(rep.text, "-1");
  EXPECT_THROW(verify_eigenpair(problem.potential, pair), VerificationError);
}

TEST(VerifyEigenpair, NumericPairsWithinTolerance) {
  const auto a = analysed(corpus::quartic(Rational(-2)), BranchSign::Plus, 2);
  ASSERT_EQ(a.r.eigenpairs.size(), 3u);
  for (const auto& pair : a.r.eigenpairs) {
    EXPECT_TRUE(pair.solution.is_numeric());
    const auto rep = verify_eigenpair(a.cs.problem.potential, pair);
    EXPECT_FALSE(rep.exact);
    EXPECT_LT(rep.relative, Real("1e-60"));
    EXPECT_EQ(pair.bound_state, BoundState::NotBound);
  }
}

TEST(ClassifyState, Branches) {
  // Decatic: minus pairs with real epsilon are bound, complex ones indeterminate.
  const auto minus = analysed(corpus::decatic(), BranchSign::Minus, 2);
  ASSERT_EQ(minus.r.eigenpairs.size(), 3u);
  int bound = 0, indeterminate = 0;
  for (const auto& p : minus.r.eigenpairs) {
    bound += p.bound_state == BoundState::Bound;
    indeterminate += p.bound_state == BoundState::Indeterminate;
  }
  EXPECT_EQ(bound + indeterminate, 3);
  EXPECT_GE(bound, 1);
  const auto plus = analysed(corpus::decatic(), BranchSign::Plus, 2);
  for (const auto& p : plus.r.eigenpairs) EXPECT_EQ(p.bound_state, BoundState::NotBound);
  // Even n: e^{-f} with f of odd degree is never square integrable.
  const auto quartic = analysed(spec_of(kQuartic + "param.mu = 6\n"), BranchSign::Minus, 0);
  EXPECT_EQ(quartic.r.eigenpairs[0].bound_state, BoundState::NotBound);
}

TEST(Spectrum, SizeMatchesDegree) {
  for (unsigned s = 0; s <= 5; ++s)
    for (const auto sign : {BranchSign::Plus, BranchSign::Minus}) {
      const Rational mu = sign == BranchSign::Plus ? Rational(2 - 2 * static_cast<long>(s)) : Rational(6 + 2 * static_cast<long>(s));
      const auto g = case_basis(corpus::quartic(mu), sign, s);
      const auto r = spectral_extract(*g, s);
      ASSERT_EQ(r.t_polynomials.size(), 1u);
      unsigned total = 0;
      for (const auto& e : r.eigenvalues) total += e.multiplicity;
      const auto deg = r.t_polynomials[0].degree_in(*g->order().registry()->eigenvalue());
      EXPECT_EQ(total, deg);
      EXPECT_EQ(deg, s + 1);
    }
}

TEST(Harmonic, HermiteStructure) {
  const auto spec = corpus::harmonic();
  const auto reg0 = prepare(spec).registry;
  // Monic Hermite: h_{k+1} = x h_k - (k/2) h_{k-1}.
  std::vector<XPoly> h{xp("1", reg0), xp("x", reg0)};
  for (unsigned k = 1; k < 10; ++k) h.push_back(XPoly::x(reg0) * h[k] - h[k - 1] * ratio(k, 2));
  for (unsigned s = 0; s <= 10; ++s) {
    const auto a = analysed(spec, BranchSign::Minus, s);
    ASSERT_EQ(a.r.eigenpairs.size(), 1u) << s;
    const auto& pair = a.r.eigenpairs[0];
    EXPECT_EQ(pair.lambda().to_string(10), std::to_string(2 * s + 1));
    const auto pc = pair.p_coefficients();
    std::vector<MultiPoly> coeffs;
    for (const auto& c : pc) coeffs.push_back(MultiPoly::constant(reg0, *c.rational()));
    EXPECT_EQ(XPoly(reg0, coeffs), h[s]);
    EXPECT_TRUE(verify_eigenpair(a.cs.problem.potential, pair).zero);
    EXPECT_EQ(pair.bound_state, BoundState::Bound);
    const auto plus = analysed(spec, BranchSign::Plus, s);
    ASSERT_EQ(plus.r.eigenpairs.size(), 1u);
    EXPECT_EQ(plus.r.eigenpairs[0].lambda().to_string(10), "-" + std::to_string(2 * s + 1));
  }
}

TEST(PolynomialText, Surds) {
  const auto a = analysed(corpus::sextic_second(5), BranchSign::Minus, 5);
  std::vector<std::string> ps;
  for (const auto& p : a.r.eigenpairs) ps.push_back(polynomial_text(p.p_coefficients(), p.solution.registry, 20));
  std::sort(ps.begin(), ps.end());
  EXPECT_EQ(ps, (std::vector<std::string>{"x^5 + 2*sqrt(2)*x^3 + 3/2*x", "x^5 - 2*sqrt(2)*x^3 + 3/2*x", "x^5 - 5/2*x"}));
}

TEST(Exponent, SignFollowsBranch) {
  const auto a = analysed(corpus::sextic_first(0), BranchSign::Minus, 0);
  const auto& pair = a.r.eigenpairs.at(0);
  EXPECT_EQ(polynomial_text(exponent_values(a.cs.problem.potential, pair), pair.solution.registry, 10), "-1/4*x^4");
}
