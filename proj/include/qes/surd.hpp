#pragma once

#include "qes/rational.hpp"

#include <string>

namespace qes {

// a + b*sqrt(c) over Q. The radicand is square-free and may be negative;
// rational values are stored with b = 0 and c = 0.
class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(Rational a);  // NOLINT(google-explicit-constructor)
  QuadSurd(int a) : QuadSurd(Rational(a)) {}  // NOLINT(google-explicit-constructor)
  // Pulls square factors out of c.
  QuadSurd(Rational a, Rational b, const Integer& c);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& radicand() const { return c_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_real() const { return b_ == 0 || c_ > 0; }

  // Both rational, or sharing the radicand.
  static bool compatible(const QuadSurd& x, const QuadSurd& y);

  QuadSurd conjugate() const;
  // a^2 - b^2 c.
  Rational norm() const;

  QuadSurd operator-() const;
  // Incompatible radicands throw PreconditionError.
  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  // Division by zero throws PreconditionError.
  friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y);

  bool operator==(const QuadSurd& other) const = default;

  // "3", "-1/2", "sqrt(2)", "-5 + 2*sqrt(2)", "-1/2*sqrt(6)".
  std::string to_string() const;

 private:
  Rational a_;
  Rational b_;
  Integer c_;
};

// m = k^2 * r with r square-free (sign kept in r). Trial division runs to the
// cube root of |m|; the cofactor is then 1, a prime, a prime square or a
// product of two primes, so a perfect-square test finishes the job. For |m|
// beyond 10^21 the trial bound is capped and r may keep a square factor.
Integer square_free_part(const Integer& m, Integer* k = nullptr);

}  // namespace qes
