#include "support/checks.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

using namespace qes;
using namespace qes::testing;

TEST(Oracle, DenseHelpers) {
  using oracle::Dense;
  const Dense f{2, -3, 0, 1};  // (t-1)^2 (t+2)
  EXPECT_EQ(oracle::square_free(f), (Dense{-2, 1, 1}));
  EXPECT_TRUE(oracle::divides(Dense{-1, 1}, f));
  EXPECT_FALSE(oracle::divides(Dense{1, 1}, f));
  EXPECT_EQ(oracle::gcd(f, Dense{-1, 0, 1}), (Dense{-1, 1}));
}

TEST(Oracle, QuarticPlusFirstCaseByHand) {
  // V = x^4+4x^3+2x^2 (mu = 0), plus branch, s = 1: rows x^0, x^1, x^2 of
  // L[1] = A0 and L[x] = A1 + x A0 with A0 = -2x + 3 + lambda.
  const oracle::Dense v{0, 0, 2, 4, 1};
  const auto m = oracle::ansatz_matrix(v, 1, 1);
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m[0][0], std::make_pair(mpq_class(3), mpq_class(1)));
  EXPECT_EQ(m[1][0], std::make_pair(mpq_class(-2), mpq_class(0)));
  EXPECT_EQ(m[0][1], std::make_pair(mpq_class(-2), mpq_class(0)));
  EXPECT_EQ(m[1][1], std::make_pair(mpq_class(7), mpq_class(1)));
  EXPECT_EQ(m[2][1], std::make_pair(mpq_class(0), mpq_class(0)));
  EXPECT_EQ(oracle::minors_gcd(v, 1, 1), (oracle::Dense{17, 10, 1}));
}

TEST(Oracle, SexticSixMatchesInlineBasis) {
  // x^6 - 15 x^2, minus branch, s = 6.
  const oracle::Dense v{0, 0, -15, 0, 0, 0, 1};
  EXPECT_EQ(oracle::minors_gcd(v, -1, 6), (oracle::Dense{2880, 0, -240, 0, 1}));
}

TEST(Oracle, SexticTenSign) {
  // x^6 - 23 x^2, minus branch, s = 10: the constant term is negative.
  const oracle::Dense v{0, 0, -23, 0, 0, 0, 1};
  EXPECT_EQ(oracle::minors_gcd(v, -1, 10), (oracle::Dense{-5184000, 0, 331456, 0, -1400, 0, 1}));
}

TEST(Oracle, AgreesWithEliminationOnNumericCases) {
  const auto cases = numeric_cases();
  ASSERT_GE(cases.size(), 40u);
  for (const auto& c : cases) {
    const auto violation = oracle_violation(c);
    EXPECT_FALSE(violation) << c.name << " " << to_string(c.sign) << " s=" << c.s << ": " << *violation;
  }
}
