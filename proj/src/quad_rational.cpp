#include "cuboid/quad_rational.hpp"

#include <cmath>
#include <stdexcept>

namespace cuboid {

int QuadRational::sign() const {
  const int sr = cuboid::sign(rat_);
  const int si = cuboid::sign(irr_);
  if (si == 0) return sr;
  if (sr == 0 || sr == si) return si;
  // Opposite signs: the term with the larger square wins.
  const Rational lhs = rat_ * rat_;
  const Rational rhs = 2 * irr_ * irr_;
  return lhs > rhs ? sr : si;
}

QuadRational QuadRational::inverse() const {
  const Rational n = norm();
  if (n == 0) throw std::domain_error("QuadRational: inverse of zero");
  return {rat_ / n, -irr_ / n};
}

QuadRational& QuadRational::operator+=(const QuadRational& o) {
  rat_ += o.rat_;
  irr_ += o.irr_;
  return *this;
}

QuadRational& QuadRational::operator-=(const QuadRational& o) {
  rat_ -= o.rat_;
  irr_ -= o.irr_;
  return *this;
}

QuadRational& QuadRational::operator*=(const QuadRational& o) {
  if (o.irr_ == 0) {
    rat_ *= o.rat_;
    irr_ *= o.rat_;
    return *this;
  }
  Rational r = rat_ * o.rat_ + 2 * irr_ * o.irr_;
  Rational i = rat_ * o.irr_ + irr_ * o.rat_;
  rat_ = std::move(r);
  irr_ = std::move(i);
  return *this;
}

QuadRational& QuadRational::operator/=(const QuadRational& o) {
  return *this *= o.inverse();
}

double QuadRational::to_double() const {
  return rat_.get_d() + irr_.get_d() * std::sqrt(2.0);
}

QuadRational pow(const QuadRational& base, unsigned exp) {
  QuadRational result(1L);
  QuadRational b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

std::string to_string(const QuadRational& x) {
  if (x.is_rational()) return to_string(x.rat());
  std::string out = to_string(x.rat());
  out += x.irr() < 0 ? "" : "+";
  out += to_string(x.irr());
  out += "*sqrt2";
  return out;
}

}  // namespace cuboid
