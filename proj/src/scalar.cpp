#include "qes/scalar.hpp"

#include "qes/errors.hpp"

#include <sstream>

namespace qes {

Real to_real(const Rational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

Complex to_complex(const QuadSurd& s) {
  Complex z(to_real(s.a()));
  if (s.is_rational()) return z;
  const Real root = sqrt(abs(to_real(Rational(s.radicand()))));
  const Real part = to_real(s.b()) * root;
  if (s.radicand() > 0) return Complex(z.real() + part, Real(0));
  return Complex(z.real(), part);
}

std::string format_real(const Real& r, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << r;
  return os.str();
}

std::string format_complex(const Complex& z, int digits) {
  const Real re = z.real();
  const Real im = z.imag();
  if (im == 0) return format_real(re, digits);
  const std::string ims = format_real(abs(im), digits) + "*I";
  if (re == 0) return (im < 0 ? "-" : "") + ims;
  return format_real(re, digits) + (im < 0 ? " - " : " + ") + ims;
}

Rational rational_upper_bound(const Real& r) {
  if (r < 0) throw PreconditionError("rational_upper_bound of a negative number");
  if (r == 0) return Rational(0);
  int e = static_cast<int>(floor(log10(r)).convert_to<long>()) + 1;
  // Guard against log10 rounding just below an exact power.
  Rational bound = 1;
  Integer ten = 10;
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  bound = e < 0 ? Rational(1) / Rational(p) : Rational(p);
  while (to_real(bound) < r) bound *= 10;
  return bound;
}

Scalar::Scalar(const Rational& q) : exact_(QuadSurd(q)), approx_(to_real(q)) {}

Scalar::Scalar(const QuadSurd& s) : exact_(s), approx_(to_complex(s)) {}

Scalar Scalar::numeric(const Complex& z) {
  Scalar out;
  out.exact_.reset();
  out.approx_ = z;
  return out;
}

bool Scalar::is_zero(const Real& abs_tol) const {
  if (exact_) return exact_->is_zero();
  return abs(approx_) <= abs_tol;
}

bool Scalar::is_real() const {
  if (exact_) return exact_->is_real();
  const Real mag = abs(approx_);
  return abs(approx_.imag()) <= Real("1e-50") * (mag > 1 ? mag : Real(1));
}

Scalar Scalar::operator-() const {
  Scalar out;
  out.approx_ = -approx_;
  if (exact_) out.exact_ = -*exact_;
  else out.exact_.reset();
  return out;
}

namespace {

template <class ExactOp, class ApproxOp>
Scalar combine(const Scalar& x, const Scalar& y, ExactOp exact_op, ApproxOp approx_op) {
  if (x.is_exact() && y.is_exact() && QuadSurd::compatible(*x.exact(), *y.exact()))
    return Scalar(exact_op(*x.exact(), *y.exact()));
  return Scalar::numeric(approx_op(x.approx(), y.approx()));
}

}  // namespace

Scalar operator+(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](auto& a, auto& b) { return a + b; }, [](auto& a, auto& b) { return Complex(a + b); });
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](auto& a, auto& b) { return a - b; }, [](auto& a, auto& b) { return Complex(a - b); });
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](auto& a, auto& b) { return a * b; }, [](auto& a, auto& b) { return Complex(a * b); });
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  if (y.is_exact() && y.exact()->is_zero()) throw PreconditionError("division by an exact zero");
  return combine(x, y, [](auto& a, auto& b) { return a / b; }, [](auto& a, auto& b) { return Complex(a / b); });
}

std::string Scalar::to_string(int digits) const {
  if (exact_) return exact_->to_string();
  return format_complex(approx_, digits);
}

}  // namespace qes
