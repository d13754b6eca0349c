#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cuboid/exact.hpp"

namespace cuboid {

// Dense univariate polynomial over the integers; coeffs()[k] multiplies x^k.
// Trailing zeros are always trimmed, so the zero polynomial has no
// coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(Integer coeff, std::size_t power);
  static IntPolynomial x() { return monomial(Integer(1), 1); }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // Coefficient of x^k, zero beyond the degree.
  Integer coeff(std::size_t k) const;
  const Integer& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;
  Integer evaluate(const Integer& x) const;
  // Sign of the value at x without building the full rational value.
  int sign_at(const Rational& x) const;
  // Sign as x -> +inf (positive_side) or -inf.
  int sign_at_infinity(bool positive_side) const;

  IntPolynomial derivative() const;
  Integer content() const;
  // Divided by the content, with a positive leading coefficient.
  IntPolynomial primitive_part() const;
  // p(x^2).
  IntPolynomial compose_square() const;
  // p(-x).
  IntPolynomial reflect() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const Integer& k);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& k) { return a *= k; }
  friend IntPolynomial operator-(const IntPolynomial& a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

// Exact Horner evaluation.
Rational poly_eval(const IntPolynomial& poly, const Rational& x);

// Pseudo-remainder of a by b, scaled by |lc(b)|^(deg a - deg b + 1) so that
// the result keeps the sign of the true remainder.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd via primitive-PRS, normalized to a positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

bool is_squarefree(const IntPolynomial& p);

// Integer bound B with every real root strictly inside (-B, B).
Integer cauchy_bound(const IntPolynomial& p);

}  // namespace cuboid
