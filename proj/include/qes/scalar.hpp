#pragma once

#include "qes/rational.hpp"
#include "qes/surd.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <optional>
#include <string>

namespace qes {

using Real = boost::multiprecision::cpp_bin_float_100;
using Complex = boost::multiprecision::cpp_complex_100;

Real to_real(const Rational& q);
Complex to_complex(const QuadSurd& s);

// Fixed-point style decimal with the given number of significant digits.
std::string format_real(const Real& r, int digits);
// "1.5", "-2.25*I", "1.5 - 2.25*I".
std::string format_complex(const Complex& z, int digits);

// Smallest power of ten (as a rational) that is >= r; zero maps to zero.
Rational rational_upper_bound(const Real& r);

// A complex number known exactly as a quadratic surd, or only numerically.
// Arithmetic stays exact while both operands are exact and share a radicand.
class Scalar {
 public:
  Scalar() : Scalar(Rational(0)) {}
  Scalar(const Rational& q);  // NOLINT(google-explicit-constructor)
  Scalar(const QuadSurd& s);  // NOLINT(google-explicit-constructor)
  static Scalar numeric(const Complex& z);

  bool is_exact() const { return exact_.has_value(); }
  const std::optional<QuadSurd>& exact() const { return exact_; }
  const Complex& approx() const { return approx_; }
  bool is_rational() const { return exact_ && exact_->is_rational(); }

  // Exact comparison when exact; otherwise |approx| <= abs_tol.
  bool is_zero(const Real& abs_tol = Real(0)) const;
  // Exact when exact; otherwise |Im| <= 1e-50 * max(1, |z|).
  bool is_real() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);

  // Exact closed form when known, otherwise the decimal approximation.
  std::string to_string(int digits) const;

 private:
  std::optional<QuadSurd> exact_;
  Complex approx_;
};

}  // namespace qes
