#include "cuboid/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cuboid {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(Integer coeff, std::size_t power) {
  std::vector<Integer> c(power + 1, Integer(0));
  c[power] = std::move(coeff);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  // Horner on the numerator with the denominator folded in:
  //   d^n p(n/d) = sum c_k n^k d^(n-k)
  if (coeffs_.empty()) return Rational(0);
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = coeffs_.back();
  Integer den_pow = 1;
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc = acc * num + coeffs_[i] * den_pow;
  }
  return make_rational(acc, den_pow);
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  if (coeffs_.empty()) return 0;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = coeffs_.back();
  Integer den_pow = 1;
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc = acc * num + coeffs_[i] * den_pow;
  }
  return sgn(acc);  // den_pow > 0
}

int IntPolynomial::sign_at_infinity(bool positive_side) const {
  if (coeffs_.empty()) return 0;
  int s = sgn(coeffs_.back());
  if (!positive_side && degree() % 2 == 1) s = -s;
  return s;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Integer(k);
  return IntPolynomial(std::move(d));
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    g = cuboid::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (coeffs_.empty()) return {};
  Integer g = content();
  if (coeffs_.back() < 0) g = -g;
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) mpz_divexact(out[k].get_mpz_t(), coeffs_[k].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::compose_square() const {
  if (coeffs_.empty()) return {};
  std::vector<Integer> out(2 * coeffs_.size() - 1, Integer(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[2 * k] = coeffs_[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::reflect() const {
  std::vector<Integer> out = coeffs_;
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& k) {
  for (auto& c : coeffs_) c *= k;
  trim();
  return *this;
}

IntPolynomial operator-(const IntPolynomial& a) {
  IntPolynomial out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string IntPolynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k > 0) {
      if (mag != 1) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Rational poly_eval(const IntPolynomial& poly, const Rational& x) { return poly.evaluate(x); }

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const Integer& lc = bc.back();
  const int db = b.degree();
  int delta = a.degree() - db + 1;
  // Classical pseudo-division: repeatedly cancel the leading term of r.
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const int dr = static_cast<int>(r.size()) - 1;
    Integer lead = r.back();
    for (auto& c : r) c *= lc;
    const int shift = dr - db;
    for (int j = 0; j <= db; ++j) r[shift + j] -= lead * bc[j];
    --delta;
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  // Account for the multiplications that were skipped when degree dropped
  // by more than one step, so the total factor is exactly lc^(da-db+1).
  Integer scale = pow(lc, static_cast<unsigned long>(std::max(delta, 0)));
  for (auto& c : r) c *= scale;
  IntPolynomial out(std::move(r));
  if (lc < 0 && (a.degree() - db + 1) % 2 == 1) out = -out;
  return out;
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  Integer cg = cuboid::gcd(a.content(), b.content());
  return x * cg;
}

bool is_squarefree(const IntPolynomial& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

Integer cauchy_bound(const IntPolynomial& p) {
  if (p.degree() <= 0) return Integer(1);
  Integer lc = abs(p.leading());
  Integer best = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Integer v = ceil(make_rational(abs(p.coeffs()[k]), lc));
    if (v > best) best = v;
  }
  return best + 2;
}

}  // namespace cuboid
