#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cuboid {

// Arbitrary-precision scalars. GMP keeps mpq_class canonical (positive
// denominator, reduced) as long as values are built through make_rational or
// arithmetic on already-canonical operands.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

inline Rational to_rational(const Integer& n) { return Rational(n); }

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

// Largest s with s*s <= n. Throws NegativeInput for n < 0.
Integer integer_sqrt_floor(const Integer& n);

Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, unsigned long exp);

int sign(const Integer& n);
int sign(const Rational& r);

Integer gcd(const Integer& a, const Integer& b);

// Serialized as "num/den", always carrying the denominator.
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

// Accepts "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

double to_double(const Rational& r);

}  // namespace cuboid
