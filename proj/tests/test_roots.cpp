#include "support/fixtures.hpp"

#include "qes/errors.hpp"
#include "qes/roots.hpp"
#include "qes/surd.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qes;
using namespace qes::testing;

namespace {

std::vector<std::string> root_texts(const std::string& t) {
  const auto reg = base_registry();
  std::vector<std::string> out;
  for (const auto& e : roots(mp(t, reg), 0)) out.push_back(e.value.to_string(30));
  return out;
}

UPoly up(std::initializer_list<long> c) {
  UPoly out;
  for (const auto v : c) out.emplace_back(v);
  return out;
}

}  // namespace

TEST(QuadSurd, NormalizesRadicand) {
  EXPECT_EQ(QuadSurd(0, 1, 8).to_string(), "2*sqrt(2)");
  EXPECT_EQ(QuadSurd(3, 0, 5).to_string(), "3");
  EXPECT_TRUE(QuadSurd(3, 2, 9).is_rational());
  EXPECT_EQ(QuadSurd(3, 2, 9), QuadSurd(9));
  EXPECT_EQ(QuadSurd(-5, 2, 2).to_string(), "-5 + 2*sqrt(2)");
  EXPECT_EQ(QuadSurd(0, ratio(-1, 2), 6).to_string(), "-1/2*sqrt(6)");
  EXPECT_EQ(QuadSurd(ratio(-1, 2)).to_string(), "-1/2");
  EXPECT_EQ(QuadSurd(0, 1, -4).radicand(), Integer(-1));
  EXPECT_FALSE(QuadSurd(0, 1, -4).is_real());
}

TEST(QuadSurd, Arithmetic) {
  const QuadSurd a(1, 1, 2), b(ratio(1, 2), -3, 2);
  EXPECT_EQ(a * a.conjugate(), QuadSurd(-1));
  EXPECT_EQ(a.norm(), Rational(-1));
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(QuadSurd(0, 1, 2) * QuadSurd(0, 1, 2), QuadSurd(2));
  EXPECT_THROW(QuadSurd(0, 1, 2) + QuadSurd(0, 1, 3), PreconditionError);
  EXPECT_THROW(a / QuadSurd(0), PreconditionError);
  EXPECT_TRUE(QuadSurd::compatible(QuadSurd(4), QuadSurd(0, 1, 3)));
}

TEST(QuadSurd, SquareFreePart) {
  Integer k;
  EXPECT_EQ(square_free_part(Integer(72), &k), Integer(2));
  EXPECT_EQ(k, Integer(6));
  EXPECT_EQ(square_free_part(Integer(-12), &k), Integer(-3));
  EXPECT_EQ(k, Integer(2));
  // 1000003 is prime.
  EXPECT_EQ(square_free_part(Integer(1000003) * 1000003 * 7, &k), Integer(7));
  EXPECT_EQ(k, Integer(1000003));
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> d(1, 100000);
  for (int i = 0; i < 200; ++i) {
    const Integer m = d(rng);
    const Integer r = square_free_part(m, &k);
    EXPECT_EQ(k * k * r, m);
    for (long p = 2; p * p <= 1000; ++p) EXPECT_NE(r % (p * p), 0);
  }
}

TEST(Scalar, FormattingAndExactness) {
  EXPECT_EQ(format_complex(Complex(Real("1.5"), Real("-2.25")), 10), "1.5 - 2.25*I");
  EXPECT_EQ(format_complex(Complex(Real(0), Real("-2.25")), 10), "-2.25*I");
  EXPECT_EQ(rational_upper_bound(Real("0.003")), ratio(1, 100));
  const Scalar a(QuadSurd(1, 1, 2)), b(Rational(3));
  EXPECT_TRUE((a * b).is_exact());
  EXPECT_EQ((a * b).to_string(20), "3 + 3*sqrt(2)");
  const Scalar c(QuadSurd(0, 1, 3));
  const auto mixed = a * c;
  EXPECT_FALSE(mixed.is_exact());
  EXPECT_LT(abs(mixed.approx() - Complex(Real("4.1815405503520557"))), Real("1e-15"));
  EXPECT_TRUE(Scalar(QuadSurd(0, 1, -1)).is_exact());
  EXPECT_FALSE(Scalar(QuadSurd(0, 1, -1)).is_real());
}

TEST(UPoly, Basics) {
  UPoly q, r;
  upoly_divmod(up({-1, 0, 1}), up({-1, 1}), q, r);
  EXPECT_EQ(q, up({1, 1}));
  EXPECT_EQ(upoly_degree(r), std::nullopt);
  EXPECT_EQ(upoly_gcd(up({-1, 0, 1}), up({2, 2})), up({1, 1}));
  EXPECT_EQ(upoly_eval(up({17, 10, 1}), Rational(-5)), Rational(-8));
  EXPECT_EQ(upoly_derivative(up({1, 2, 3})), up({2, 6}));
  // (t-1)^2 (t+2) = t^3 - 3t + 2.
  const auto sf = square_free_decomposition(up({2, -3, 0, 1}));
  ASSERT_EQ(sf.size(), 2u);
  EXPECT_EQ(sf[0], up({2, 1}));
  EXPECT_EQ(sf[1], up({-1, 1}));
}

TEST(Roots, ExactExamples) {
  EXPECT_EQ(root_texts("lambda-1"), std::vector<std::string>{"1"});
  EXPECT_EQ(root_texts("lambda^2-8"), (std::vector<std::string>{"-2*sqrt(2)", "2*sqrt(2)"}));
  EXPECT_EQ(root_texts("lambda^3-64*lambda"), (std::vector<std::string>{"-8", "0", "8"}));
  EXPECT_EQ(root_texts("lambda^2+10*lambda+17"), (std::vector<std::string>{"-5 - 2*sqrt(2)", "-5 + 2*sqrt(2)"}));
  EXPECT_EQ(root_texts("3*lambda^3-2*lambda^2-3*lambda+2"), (std::vector<std::string>{"-1", "2/3", "1"}));
  EXPECT_TRUE(root_texts("7").empty());
}

TEST(Roots, Multiplicity) {
  const auto reg = base_registry();
  const auto r = roots(mp("(lambda-1)^2*(lambda+2)*(lambda^2-2)^3", reg), 0);
  ASSERT_EQ(r.size(), 4u);
  unsigned total = 0;
  for (const auto& e : r) total += e.multiplicity;
  EXPECT_EQ(total, 9u);
  EXPECT_EQ(r[0].value.to_string(10), "-2");
  EXPECT_EQ(r[0].multiplicity, 1u);
  EXPECT_EQ(r[1].multiplicity, 3u);
  EXPECT_EQ(r[3].value.to_string(10), "sqrt(2)");
}

TEST(Roots, ComplexQuadratic) {
  const auto reg = base_registry();
  const auto r = roots(mp("lambda^2+2*lambda+5", reg), 0);
  ASSERT_EQ(r.size(), 2u);
  for (const auto& e : r) {
    EXPECT_TRUE(e.value.is_exact());
    EXPECT_FALSE(e.value.is_real());
  }
}

TEST(Roots, CertifiedNumericRoots) {
  const auto reg = base_registry();
  // The quartic plus-branch cubic at s = 2 and an unsolvable quintic.
  for (const char* t : {"lambda^3+21*lambda^2+115*lambda+135", "lambda^5-lambda-1",
                        "lambda^6+78*lambda^5+2255*lambda^4+30276*lambda^3+196015*lambda^2+596046*lambda+777825"}) {
    const auto f = mp(t, reg);
    const auto r = roots(f, 0);
    EXPECT_EQ(r.size(), f.degree_in(0)) << t;
    for (const auto& e : r) {
      EXPECT_FALSE(e.value.is_exact());
      EXPECT_LE(e.residual_bound, ratio(1, 10000000000));
      const auto coeffs = upoly_from(f, 0);
      Complex y(0);
      for (std::size_t k = coeffs.size(); k-- > 0;) y = y * e.value.approx() + Complex(to_real(coeffs[k]));
      EXPECT_LT(abs(y), Real("1e-60"));
    }
    for (std::size_t i = 1; i < r.size(); ++i) {
      const auto &a = r[i - 1].value.approx(), &b = r[i].value.approx();
      EXPECT_TRUE(a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()));
    }
  }
  const auto quintic = roots(mp("lambda^5-lambda-1", reg), 0);
  int real_count = 0;
  for (const auto& e : quintic) real_count += e.value.is_real();
  EXPECT_EQ(real_count, 1);
  EXPECT_EQ(quintic.size(), 5u);
}

TEST(Roots, SpectrumOfQuarticCubicIsReal) {
  const auto r = root_texts("lambda^3+21*lambda^2+115*lambda+135");
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].substr(0, 20), "-12.8919904044561205");
  EXPECT_EQ(r[2].substr(0, 20), "-1.61201036588890391");
}

TEST(Roots, AberthAndInclusion) {
  std::vector<Complex> coeffs{Complex(-6), Complex(11), Complex(-6), Complex(1)};
  const auto z = aberth(coeffs);
  ASSERT_EQ(z.size(), 3u);
  EXPECT_TRUE(certify_roots(coeffs, z));
  const auto radii = inclusion_radii(coeffs, z);
  ASSERT_TRUE(radii);
  for (const auto& r : *radii) EXPECT_LT(r, Real("1e-50"));
  EXPECT_FALSE(certify_roots(coeffs, {Complex(1), Complex(1), Complex(3)}));
}

TEST(Roots, RequiresUnivariate) {
  const auto reg = base_registry({"mu"});
  EXPECT_THROW(roots(mp("lambda*mu-1", reg), 0), PreconditionError);
}
