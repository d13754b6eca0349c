#include "cuboid/exact.hpp"

#include <stdexcept>

#include "cuboid/errors.hpp"

namespace cuboid {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Integer integer_sqrt_floor(const Integer& n) {
  if (n < 0) throw NegativeInput("integer_sqrt_floor of a negative number");
  Integer out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

Integer pow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rational pow(const Rational& base, unsigned long exp) {
  Integer num = pow(Integer(base.get_num()), exp);
  Integer den = pow(Integer(base.get_den()), exp);
  Rational out(num, den);
  return out;  // already reduced: powers of coprime values stay coprime
}

int sign(const Integer& n) { return sgn(n); }
int sign(const Rational& r) { return sgn(r); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& n) { return n.get_str(); }

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  Integer out;
  std::string digits = (s[0] == '+') ? s.substr(1) : s;
  if (out.set_str(digits, 10) != 0)
    throw std::invalid_argument("malformed integer literal: " + s);
  return out;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)),
                       parse_integer(text.substr(slash + 1)));
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace cuboid
