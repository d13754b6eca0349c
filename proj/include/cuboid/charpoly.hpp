#pragma once

#include <array>

#include "cuboid/exact.hpp"
#include "cuboid/polynomial.hpp"

namespace cuboid {

// Coprime positive parameters (p, q), p != q, of the reduced tenth-degree
// polynomial Q_pq.
class SeedPair {
 public:
  // Throws InvalidSeed on p <= 0, q <= 0, p == q or gcd(p, q) != 1.
  SeedPair(Integer p, Integer q);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  SeedPair swapped() const { return SeedPair(q_, p_); }
  // p >= 59 q, the regime where the five roots are separated.
  bool large_p() const { return p_ >= 59 * q_; }

  friend bool operator==(const SeedPair&, const SeedPair&) = default;

 private:
  Integer p_;
  Integer q_;
};

bool is_valid_seed(const Integer& p, const Integer& q);

struct CharParams {
  Integer a;
  Integer b;
  Integer u;
};

// Which relation between a, b, u the seed resolves: b u = a^2 with
// (a, b, u) = (pq, p^2, q^2), or a u = b^2 with (a, b, u) = (p^2, pq, q^2).
enum class Branch { first, second };

CharParams params_for(const SeedPair& seed, Branch branch);

// Coefficients of the degree-12 characteristic polynomial, grouped exactly as
// the printed form: out[k] multiplies t^(2k). Generic over any commutative
// ring R so the same grouping drives numeric and symbolic construction.
template <class R>
std::array<R, 7> characteristic_groups(const R& a, const R& b, const R& u) {
  const R a2 = a * a, b2 = b * b, u2 = u * u;
  const R a4 = a2 * a2, b4 = b2 * b2, u4 = u2 * u2;
  const R two(2L), four(4L), six(6L), eight(8L), twelve(12L);
  std::array<R, 7> g;
  g[6] = R(1L);
  g[5] = six * u2 - two * a2 - two * b2;
  g[4] = u4 + b4 + a4 + four * a2 * u2 + four * b2 * u2 - twelve * b2 * a2;
  g[3] = six * a4 * u2 + six * u2 * b4 - eight * a2 * b2 * u2 - two * u4 * a2 -
         two * u4 * b2 - two * a4 * b2 - two * b4 * a2;
  g[2] = four * u2 * b4 * a2 + four * a4 * u2 * b2 - twelve * u4 * a2 * b2 + u4 * a4 +
         u4 * b4 + a4 * b4;
  g[1] = six * a4 * u2 * b4 - two * u4 * a4 * b2 - two * u4 * a2 * b4;
  g[0] = u4 * a4 * b4;
  return g;
}

// Coefficients of Q_pq(t): out[k] multiplies t^(2k), grouped as printed.
template <class R>
std::array<R, 6> qpq_groups(const R& p, const R& q) {
  const R p2 = p * p, q2 = q * q;
  const R p4 = p2 * p2, q4 = q2 * q2;
  const R p6 = p4 * p2, q6 = q4 * q2;
  const R p8 = p4 * p4, q8 = q4 * q4;
  const R two(2L), three(3L), four(4L), ten(10L), fourteen(14L);
  std::array<R, 6> g;
  g[5] = R(1L);
  g[4] = (two * q2 + p2) * (three * q2 - two * p2);
  g[3] = q8 + ten * p2 * q6 + four * p4 * q4 - fourteen * p6 * q2 + p8;
  g[2] = -(p2 * q2 * (q8 - fourteen * p2 * q6 + four * p4 * q4 + ten * p6 * q2 + p8));
  g[1] = -(p6 * q6 * (q2 + two * p2) * (three * p2 - two * q2));
  g[0] = -(q8 * q2 * p8 * p2);
  return g;
}

IntPolynomial build_characteristic(const CharParams& params);

// Q_pq together with its half-polynomial P, P(t^2) = Q_pq(t).
struct CuboidPolynomial {
  SeedPair seed;
  IntPolynomial poly;
  IntPolynomial half;
};

CuboidPolynomial build_Qpq(const SeedPair& seed);

// Degree-5 P with P(t^2) = poly(t). Throws OddTermPresent.
IntPolynomial half_polynomial(const IntPolynomial& even_poly);
IntPolynomial half_polynomial(const CuboidPolynomial& cp);

// characteristic(params_for(seed, branch)) == (t^2 - a^2) Q_pq(t), where a
// is the parameter split off by the branch (pq in both cases).
bool verify_factorization(const SeedPair& seed, Branch branch);
// Same identity against an explicitly supplied Q (used to exercise failure).
bool verify_factorization(const SeedPair& seed, Branch branch, const IntPolynomial& qpq);

// p^10 q^10 Q_pq(t) + t^10 Q_qp(p^2 q^2 / t) == 0 as polynomials in t.
bool verify_reversion(const SeedPair& seed);
bool verify_reversion(const SeedPair& seed, const IntPolynomial& qpq, const IntPolynomial& qqp);

// t^10 Q(k/t) expanded: coefficient j of Q lands on t^(10-j) times k^j.
IntPolynomial reversed_substitution(const IntPolynomial& poly, const Integer& k);

}  // namespace cuboid
