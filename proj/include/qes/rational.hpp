#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qes {

// Arbitrary-precision fraction. GMP keeps every mpq arithmetic result
// canonical (positive denominator, reduced, zero as 0/1), but the two-argument
// constructor does not; build fractions with ratio().
using Rational = mpq_class;
using Integer = mpz_class;

// num/den in canonical form; den must be nonzero.
Rational ratio(const Integer& num, const Integer& den);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "a", "-a" and "a/b" with decimal integers; throws UsageError.
Rational parse_rational(std::string_view text);

// Smallest integer >= q.
Integer ceil(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace qes
