#pragma once

#include <array>
#include <map>
#include <utility>

#include "cuboid/exact.hpp"

namespace cuboid {

// Sparse Laurent polynomial in the variables (c, q, z). Exponents are signed
// so that substituting p = 1/z can be carried out before the denominators are
// cleared; clear_denominators() then restores non-negative z powers.
template <class Coeff>
class TriPolynomial {
 public:
  using Exponents = std::array<int, 3>;  // (e_c, e_q, e_z)
  using Terms = std::map<Exponents, Coeff>;
  enum Var : std::size_t { kC = 0, kQ = 1, kZ = 2 };

  TriPolynomial() = default;
  TriPolynomial(Coeff constant) { add_term({0, 0, 0}, std::move(constant)); }  // NOLINT

  static TriPolynomial term(Coeff coeff, int ec, int eq, int ez) {
    TriPolynomial out;
    out.add_term({ec, eq, ez}, std::move(coeff));
    return out;
  }
  static TriPolynomial variable(Var v, int power = 1) {
    Exponents e{0, 0, 0};
    e[v] = power;
    TriPolynomial out;
    out.add_term(e, Coeff(1L));
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0L) : it->second;
  }

  int min_exponent(Var v) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[v] < m) m = e[v];
      first = false;
    }
    return m;
  }
  int max_exponent(Var v) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[v] > m) m = e[v];
      first = false;
    }
    return m;
  }

  // Multiply by v^k.
  TriPolynomial shifted(Var v, int k) const {
    TriPolynomial out;
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f[v] += k;
      out.terms_.emplace(f, c);
    }
    return out;
  }

  // Smallest k >= 0 with v^k * this free of negative v-powers, and the product.
  std::pair<int, TriPolynomial> clear_denominators(Var v) const {
    const int k = is_zero() ? 0 : std::max(0, -min_exponent(v));
    return {k, shifted(v, k)};
  }

  // Collects the terms with e[v] == power, dropping v.
  TriPolynomial slice(Var v, int power) const {
    TriPolynomial out;
    for (const auto& [e, c] : terms_) {
      if (e[v] != power) continue;
      Exponents f = e;
      f[v] = 0;
      out.add_term(f, c);
    }
    return out;
  }

  TriPolynomial& operator+=(const TriPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  TriPolynomial& operator-=(const TriPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  TriPolynomial& operator*=(const TriPolynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend TriPolynomial operator+(TriPolynomial a, const TriPolynomial& b) { return a += b; }
  friend TriPolynomial operator-(TriPolynomial a, const TriPolynomial& b) { return a -= b; }
  friend TriPolynomial operator-(const TriPolynomial& a) {
    TriPolynomial out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend TriPolynomial operator*(const TriPolynomial& a, const TriPolynomial& b) {
    TriPolynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
      }
    }
    return out;
  }
  friend bool operator==(const TriPolynomial& a, const TriPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  // Evaluates with values from any ring V that Coeff converts into
  // (Integer -> Rational, QuadRational -> QuadRational). Negative powers need
  // an invertible value.
  template <class V>
  V evaluate(const V& c, const V& q, const V& z) const {
    V total(0L);
    for (const auto& [e, coef] : terms_) {
      V v = V(coef);
      v *= power(c, e[0]);
      v *= power(q, e[1]);
      v *= power(z, e[2]);
      total += v;
    }
    return total;
  }

 private:
  template <class V>
  static V power(const V& base, int e) {
    if (e == 0) return V(1L);
    V b = e > 0 ? base : V(1L) / base;
    unsigned n = static_cast<unsigned>(e > 0 ? e : -e);
    V result(1L);
    while (n != 0) {
      if (n & 1U) result *= b;
      n >>= 1U;
      if (n != 0) b *= b;
    }
    return result;
  }

  void add_term(const Exponents& e, Coeff c) {
    if (c == Coeff(0L)) return;
    auto [it, inserted] = terms_.try_emplace(e, std::move(c));
    if (inserted) return;
    it->second += c;
    if (it->second == Coeff(0L)) terms_.erase(it);
  }

  Terms terms_;
};

template <class Coeff>
TriPolynomial<Coeff> pow(const TriPolynomial<Coeff>& base, unsigned exp) {
  TriPolynomial<Coeff> result(Coeff(1L));
  TriPolynomial<Coeff> b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

}  // namespace cuboid
