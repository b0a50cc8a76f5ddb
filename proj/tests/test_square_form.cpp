#include "support/fixtures.hpp"

#include "qes/errors.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qes;
using namespace qes::testing;

TEST(SquareForm, Quartic) {
  const auto reg = base_registry({"mu"});
  const auto sf = complete_square(xp("x^4+4*x^3+2*x^2-mu*x", reg), 2);
  EXPECT_EQ(sf.n, 2u);
  EXPECT_EQ(sf.b, xp("2*x-1", reg));
  EXPECT_EQ(sf.c, xp("(4-mu)*x-1", reg));
}

TEST(SquareForm, AlreadySquare) {
  const auto reg = base_registry();
  const auto sf = complete_square(xp("x^2", reg), 1);
  EXPECT_TRUE(sf.b.is_zero());
  EXPECT_TRUE(sf.c.is_zero());
}

TEST(SquareForm, Decatic) {
  const auto reg = base_registry({"delta", "epsilon"});
  const auto sf = complete_square(xp("x^10-x^8+x^6+delta*x^4+epsilon*x^2", reg), 5);
  EXPECT_EQ(sf.b, xp("-x^3/2+3*x/8", reg));
  EXPECT_EQ(sf.c, xp("(delta+3/8)*x^4+(epsilon-9/64)*x^2", reg));
}

TEST(SquareForm, Dodecatic) {
  const auto reg = base_registry({"mu", "kappa"});
  const auto sf = complete_square(xp("x^12+kappa*x^6+mu*x^5", reg), 6);
  EXPECT_EQ(sf.b, xp("kappa/2", reg));
  EXPECT_EQ(sf.c, xp("mu*x^5-kappa^2/4", reg));
}

TEST(SquareForm, Preconditions) {
  const auto reg = base_registry();
  EXPECT_THROW(complete_square(xp("2*x^4", reg), 2), PreconditionError);
  EXPECT_THROW(complete_square(xp("x^5", reg), 2), PreconditionError);
  EXPECT_THROW(complete_square(xp("x^4", reg), 0), PreconditionError);
}

TEST(SquareForm, ShiftByLambda) {
  const auto reg = base_registry({"mu"});
  const auto sf = shift_by_lambda(complete_square(xp("x^4+4*x^3+2*x^2-mu*x", reg), 2));
  EXPECT_EQ(sf.c, xp("(4-mu)*x-1-lambda", reg));
  EXPECT_EQ(shift_by_lambda(complete_square(xp("x^2", reg), 1)).c, xp("-lambda", reg));
  const auto reg2 = base_registry({"delta", "epsilon"});
  EXPECT_EQ(shift_by_lambda(complete_square(xp("x^10-x^8+x^6+delta*x^4+epsilon*x^2", reg2), 5)).c,
            xp("(delta+3/8)*x^4+(epsilon-9/64)*x^2-lambda", reg2));
}

namespace {

XPoly random_monic(std::mt19937& rng, const RegistryPtr& reg, unsigned degree) {
  std::uniform_int_distribution<int> c(-6, 6), d(1, 4), sym(0, 3);
  std::vector<MultiPoly> coeffs;
  for (unsigned k = 0; k < degree; ++k) {
    auto v = MultiPoly::constant(reg, ratio(c(rng), d(rng)));
    if (sym(rng) == 0) v += MultiPoly::variable(reg, "mu") * Rational(c(rng));
    coeffs.push_back(v);
  }
  coeffs.push_back(MultiPoly::constant(reg, 1));
  return XPoly(reg, coeffs);
}

}  // namespace

TEST(SquareForm, ReconstructionAndDegreeBounds) {
  std::mt19937 rng(5);
  const auto reg = base_registry({"mu"});
  for (int i = 0; i < 200; ++i) {
    const unsigned n = 1 + i % 6;
    const auto v = random_monic(rng, reg, 2 * n);
    const auto sf = complete_square(v, n);
    EXPECT_EQ(sf.reconstruct(), v);
    EXPECT_TRUE(sf.b.is_zero() || *sf.b.degree() < n);
    EXPECT_TRUE(sf.c.is_zero() || *sf.c.degree() < n);
    const auto sl = shift_by_lambda(sf);
    EXPECT_EQ(sl.reconstruct(), v - XPoly::constant(MultiPoly::variable(reg, "lambda")));
  }
}

TEST(SquareForm, PerturbingBBreaksReconstruction) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> c(1, 9);
  const auto reg = base_registry({"mu"});
  for (int i = 0; i < 100; ++i) {
    const unsigned n = 1 + i % 5;
    const auto v = random_monic(rng, reg, 2 * n);
    auto sf = complete_square(v, n);
    const unsigned k = static_cast<unsigned>(i) % n;
    sf.b += XPoly::monomial(reg, k, MultiPoly::constant(reg, ratio(c(rng) * (i % 2 ? 1 : -1), c(rng))));
    EXPECT_NE(sf.reconstruct(), v);
  }
}
