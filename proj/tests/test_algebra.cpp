#include "support/fixtures.hpp"

#include "qes/errors.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qes;
using namespace qes::testing;

namespace {

RegistryPtr ring() {
  return registry_of({{"p1", Block::Ansatz}, {"p0", Block::Ansatz}, {"lambda", Block::Eigenvalue}, {"mu", Block::Parameter}});
}

MultiPoly random_poly(std::mt19937& rng, const RegistryPtr& reg, int max_terms = 4, unsigned max_deg = 3) {
  std::uniform_int_distribution<int> coeff(-5, 5), den(1, 3), deg(0, static_cast<int>(max_deg)),
      nterms(0, max_terms);
  std::vector<Term> terms;
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m;
    m.exponents.resize(reg->size());
    for (auto& e : m.exponents) e = static_cast<std::uint32_t>(deg(rng)) % (max_deg + 1) / 2;
    m.exponents[static_cast<std::size_t>(t) % reg->size()] = static_cast<std::uint32_t>(deg(rng));
    terms.push_back({m, ratio(coeff(rng), den(rng))});
  }
  MultiPoly out(reg);
  for (auto& t : terms) out += MultiPoly::from_terms(reg, {t});
  return out;
}

XPoly random_xpoly(std::mt19937& rng, const RegistryPtr& reg) {
  std::uniform_int_distribution<int> deg(0, 4);
  std::vector<MultiPoly> coeffs;
  const int d = deg(rng);
  for (int k = 0; k <= d; ++k) coeffs.push_back(random_poly(rng, reg, 2, 2));
  return XPoly(reg, coeffs);
}

}  // namespace

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("-6/4"), ratio(-3, 2));
  EXPECT_EQ(parse_rational("17"), Rational(17));
  EXPECT_EQ(to_string(ratio(-3, 2)), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), UsageError);
  EXPECT_THROW(parse_rational("1.5"), UsageError);
  EXPECT_EQ(ceil(ratio(7, 2)), Integer(4));
  EXPECT_EQ(ceil(ratio(-7, 2)), Integer(-3));
}

TEST(MultiPolyArith, DifferenceOfSquares) {
  const auto reg = base_registry();
  EXPECT_EQ(xp("(x+1)*(x-1)", reg), xp("x^2-1", reg));
}

TEST(MultiPolyArith, AdditiveInverse) {
  const auto reg = ring();
  const auto f = mp("3*p1*lambda - mu^2 + 1/2", reg);
  EXPECT_TRUE(mp_arith(ArithKind::Add, f, mp_arith(ArithKind::Neg, f, f)).is_zero());
}

TEST(MultiPolyArith, QuarticSquare) {
  const auto reg = base_registry();
  EXPECT_EQ(xp("(x^2+2*x-1)^2", reg), xp("x^4+4*x^3+2*x^2-4*x+1", reg));
}

TEST(MultiPolyArith, RegistryMismatchIsUsageError) {
  const auto a = mp("lambda", base_registry());
  const auto b = mp("lambda", base_registry({"mu"}));
  EXPECT_THROW(mp_arith(ArithKind::Add, a, b), UsageError);
}

TEST(MultiPolyArith, RingAxiomsOnRandomInputs) {
  std::mt19937 rng(20261018);
  const auto reg = ring();
  for (int i = 0; i < 300; ++i) {
    const auto f = random_poly(rng, reg), g = random_poly(rng, reg), h = random_poly(rng, reg);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(f * MultiPoly::constant(reg, 1), f);
  }
}

TEST(Derivative, ExponentOfQuarticEigenfunction) {
  const auto reg = base_registry();
  EXPECT_EQ(mp_derivative(xp("x^3/3 + x^2 - x", reg), "x"), xp("x^2+2*x-1", reg));
  EXPECT_EQ(mp_derivative(xp("x^4+4*x^3", reg), "x"), xp("4*x^3+12*x^2", reg));
  EXPECT_TRUE(mp_derivative(xp("x^2", reg), "lambda").is_zero());
}

TEST(Derivative, ProductRuleOnRandomInputs) {
  std::mt19937 rng(7);
  const auto reg = ring();
  for (int i = 0; i < 200; ++i) {
    const auto f = random_poly(rng, reg), g = random_poly(rng, reg);
    for (const char* v : {"p1", "lambda", "mu"})
      EXPECT_EQ(mp_derivative(f * g, v), f * mp_derivative(g, v) + g * mp_derivative(f, v));
    const auto p = random_xpoly(rng, reg), q = random_xpoly(rng, reg);
    EXPECT_EQ(mp_derivative(p * q, "x"), p * mp_derivative(q, "x") + q * mp_derivative(p, "x"));
    EXPECT_EQ(mp_derivative(p * q, "lambda"), p * mp_derivative(q, "lambda") + q * mp_derivative(p, "lambda"));
  }
}

TEST(XCoefficients, ReadOff) {
  const auto reg = registry_of({{"p0", Block::Ansatz}, {"lambda", Block::Eigenvalue}, {"mu", Block::Parameter}});
  const auto c = x_coefficients(xp("x^2 + (lambda+4*p0)", reg));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].first, 2u);
  EXPECT_EQ(c[0].second, mp("1", reg));
  EXPECT_EQ(c[1].first, 0u);
  EXPECT_EQ(c[1].second, mp("lambda+4*p0", reg));
  EXPECT_TRUE(x_coefficients(XPoly(reg)).empty());
  const auto d = x_coefficients(xp("(mu-2)*x + 3 + lambda", reg));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].second, mp("mu-2", reg));
  EXPECT_EQ(d[1].second, mp("lambda+3", reg));
}

TEST(XCoefficients, ReassemblyRoundTrip) {
  std::mt19937 rng(11);
  const auto reg = ring();
  for (int i = 0; i < 200; ++i) {
    const auto p = random_xpoly(rng, reg);
    EXPECT_EQ(from_x_coefficients(reg, x_coefficients(p)), p);
  }
}

TEST(ContentNormalize, Examples) {
  const auto reg = base_registry({"g"});
  EXPECT_EQ(content_normalize(mp("1/2*lambda^2 + 5*lambda + 17/2", reg)).to_string(), "lambda^2 + 10*lambda + 17");
  EXPECT_EQ(content_normalize(mp("384*g - 216*lambda + lambda^3", reg)).to_string(), "lambda^3 - 216*lambda + 384*g");
  EXPECT_EQ(content_normalize(mp("-3*lambda", reg)).to_string(), "lambda");
}

TEST(ContentNormalize, IdempotentAndRationalMultiple) {
  std::mt19937 rng(3);
  const auto reg = ring();
  for (int i = 0; i < 200; ++i) {
    const auto f = random_poly(rng, reg);
    if (f.is_zero()) {
      EXPECT_THROW(content_normalize(f), PreconditionError);
      continue;
    }
    const auto g = content_normalize(f);
    EXPECT_EQ(content_normalize(g), g);
    const Rational ratio = g.leading_term().coeff / f.leading_term().coeff;
    EXPECT_EQ(f * ratio, g);
    EXPECT_GT(g.leading_term().coeff, 0);
    for (const auto& t : g.terms()) EXPECT_EQ(t.coeff.get_den(), 1);
  }
}

TEST(Parser, Errors) {
  const auto reg = base_registry({"mu"});
  EXPECT_THROW(parse_xpoly("x^-1", reg), ParseError);
  EXPECT_THROW(parse_xpoly("x^(1/2)", reg), ParseError);
  EXPECT_THROW(parse_xpoly("x + nu", reg), ParseError);
  EXPECT_THROW(parse_xpoly("x/0", reg), ParseError);
  EXPECT_THROW(parse_xpoly("x/mu", reg), ParseError);
  EXPECT_THROW(parse_xpoly("(x+1", reg), ParseError);
  EXPECT_THROW(parse_multipoly("x+lambda", reg), ParseError);
  try {
    parse_xpoly("x^2 + $", reg, 4);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_EQ(e.column(), 7);
  }
}

TEST(Parser, Identifiers) {
  EXPECT_EQ(collect_identifiers("x^4 + mu*x - delta*mu + x_1"), (std::vector<std::string>{"mu", "delta", "x_1"}));
}
