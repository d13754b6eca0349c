#pragma once

#include <string>

#include "cuboid/exact.hpp"

namespace cuboid {

// Exact element rat + irr*sqrt(2) of Q(sqrt 2).
class QuadRational {
 public:
  QuadRational() = default;
  // Implicit lift from any GMP integer or rational value or expression.
  template <class T, class U>
  QuadRational(const __gmp_expr<T, U>& rat) : rat_(rat) {}  // NOLINT
  QuadRational(long rat) : rat_(rat) {}                 // NOLINT: implicit lift
  QuadRational(Rational rat, Rational irr)
      : rat_(std::move(rat)), irr_(std::move(irr)) {}

  static QuadRational sqrt2() { return {Rational(0), Rational(1)}; }

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }
  bool is_rational() const { return irr_ == 0; }

  // Exact sign, decided by comparing rat^2 with 2*irr^2.
  int sign() const;

  QuadRational conjugate() const { return {rat_, -irr_}; }
  // rat^2 - 2*irr^2, the field norm.
  Rational norm() const { return rat_ * rat_ - 2 * irr_ * irr_; }
  QuadRational inverse() const;

  QuadRational& operator+=(const QuadRational& o);
  QuadRational& operator-=(const QuadRational& o);
  QuadRational& operator*=(const QuadRational& o);
  QuadRational& operator/=(const QuadRational& o);

  friend QuadRational operator-(const QuadRational& a) { return {-a.rat_, -a.irr_}; }
  friend QuadRational operator+(QuadRational a, const QuadRational& b) { return a += b; }
  friend QuadRational operator-(QuadRational a, const QuadRational& b) { return a -= b; }
  friend QuadRational operator*(QuadRational a, const QuadRational& b) { return a *= b; }
  friend QuadRational operator/(QuadRational a, const QuadRational& b) { return a /= b; }

  friend bool operator==(const QuadRational& a, const QuadRational& b) {
    return a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }
  friend bool operator<(const QuadRational& a, const QuadRational& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator<=(const QuadRational& a, const QuadRational& b) {
    return (a - b).sign() <= 0;
  }
  friend bool operator>(const QuadRational& a, const QuadRational& b) { return b < a; }
  friend bool operator>=(const QuadRational& a, const QuadRational& b) { return b <= a; }

  double to_double() const;

 private:
  Rational rat_{0};
  Rational irr_{0};
};

QuadRational pow(const QuadRational& base, unsigned exp);

inline int sign(const QuadRational& x) { return x.sign(); }

// "a/b" for rationals, "a/b+c/d*sqrt2" otherwise.
std::string to_string(const QuadRational& x);

}  // namespace cuboid
