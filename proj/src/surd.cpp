#include "qes/surd.hpp"

#include "qes/errors.hpp"

namespace qes {
namespace {

void require_compatible(const QuadSurd& x, const QuadSurd& y) {
  if (!QuadSurd::compatible(x, y))
    throw PreconditionError("surds with radicands " + to_string(x.radicand()) + " and " + to_string(y.radicand()) +
                            " do not share a field");
}

Integer common_radicand(const QuadSurd& x, const QuadSurd& y) {
  return x.is_rational() ? y.radicand() : x.radicand();
}

}  // namespace

Integer square_free_part(const Integer& m, Integer* k) {
  if (m == 0) throw PreconditionError("square_free_part of zero");
  Integer rest = abs(m);
  Integer root = 1;
  Integer r = m < 0 ? -1 : 1;

  Integer limit;
  mpz_root(limit.get_mpz_t(), rest.get_mpz_t(), 3);
  if (limit > 10'000'000) limit = 10'000'000;
  for (Integer p = 2; p <= limit && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) r *= p;
  }
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
    root *= s;
  } else {
    r *= rest;
  }
  if (k) *k = root;
  return r;
}

QuadSurd::QuadSurd(Rational a) : a_(std::move(a)) {}

QuadSurd::QuadSurd(Rational a, Rational b, const Integer& c) : a_(std::move(a)), b_(std::move(b)) {
  if (b_ == 0 || c == 0) {
    b_ = 0;
    return;
  }
  Integer k;
  c_ = square_free_part(c, &k);
  b_ *= Rational(k);
  if (c_ == 1) {
    a_ += b_;
    b_ = 0;
    c_ = 0;
  }
}

bool QuadSurd::compatible(const QuadSurd& x, const QuadSurd& y) {
  return x.is_rational() || y.is_rational() || x.c_ == y.c_;
}

QuadSurd QuadSurd::conjugate() const {
  QuadSurd out = *this;
  out.b_ = -out.b_;
  return out;
}

Rational QuadSurd::norm() const { return a_ * a_ - b_ * b_ * Rational(c_); }

QuadSurd QuadSurd::operator-() const {
  QuadSurd out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  require_compatible(x, y);
  return QuadSurd(x.a_ + y.a_, x.b_ + y.b_, common_radicand(x, y));
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  require_compatible(x, y);
  const Integer c = common_radicand(x, y);
  return QuadSurd(x.a_ * y.a_ + x.b_ * y.b_ * Rational(c), x.a_ * y.b_ + x.b_ * y.a_, c);
}

QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
  if (y.is_zero()) throw PreconditionError("division of a surd by zero");
  require_compatible(x, y);
  // The norm is nonzero: c is square-free and not 1, so sqrt(c) is irrational.
  const Rational n = y.norm();
  const QuadSurd num = x * y.conjugate();
  return QuadSurd(num.a_ / n, num.b_ / n, num.c_);
}

std::string QuadSurd::to_string() const {
  if (is_rational()) return qes::to_string(a_);
  const std::string root = "sqrt(" + qes::to_string(c_) + ")";
  std::string surd;
  const Rational mag = abs(b_);
  surd = mag == 1 ? root : qes::to_string(mag) + "*" + root;
  if (a_ == 0) return (b_ < 0 ? "-" : "") + surd;
  return qes::to_string(a_) + (b_ < 0 ? " - " : " + ") + surd;
}

}  // namespace qes
