#include "cuboid/charpoly.hpp"

#include <vector>

#include "cuboid/errors.hpp"

namespace cuboid {

bool is_valid_seed(const Integer& p, const Integer& q) {
  return p > 0 && q > 0 && p != q && gcd(p, q) == 1;
}

SeedPair::SeedPair(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (!is_valid_seed(p_, q_)) {
    throw InvalidSeed("seed (" + p_.get_str() + ", " + q_.get_str() +
                      ") must be positive, distinct and coprime");
  }
}

CharParams params_for(const SeedPair& seed, Branch branch) {
  const Integer& p = seed.p();
  const Integer& q = seed.q();
  if (branch == Branch::first) return {p * q, p * p, q * q};
  return {p * p, p * q, q * q};
}

namespace {

template <std::size_t N>
IntPolynomial even_polynomial(const std::array<Integer, N>& groups) {
  std::vector<Integer> c(2 * N - 1, Integer(0));
  for (std::size_t k = 0; k < N; ++k) c[2 * k] = groups[k];
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial build_characteristic(const CharParams& params) {
  return even_polynomial(characteristic_groups<Integer>(params.a, params.b, params.u));
}

CuboidPolynomial build_Qpq(const SeedPair& seed) {
  IntPolynomial poly = even_polynomial(qpq_groups<Integer>(seed.p(), seed.q()));
  IntPolynomial half = half_polynomial(poly);
  return {seed, std::move(poly), std::move(half)};
}

IntPolynomial half_polynomial(const IntPolynomial& even_poly) {
  const auto& c = even_poly.coeffs();
  std::vector<Integer> half;
  half.reserve(c.size() / 2 + 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k % 2 == 1) {
      if (c[k] != 0) throw OddTermPresent("odd coefficient of t^" + std::to_string(k) + " is nonzero");
      continue;
    }
    half.push_back(c[k]);
  }
  return IntPolynomial(std::move(half));
}

IntPolynomial half_polynomial(const CuboidPolynomial& cp) { return half_polynomial(cp.poly); }

bool verify_factorization(const SeedPair& seed, Branch branch, const IntPolynomial& qpq) {
  const CharParams params = params_for(seed, branch);
  // The split-off root is a (first branch) or b (second branch); both are pq.
  const Integer& split = branch == Branch::first ? params.a : params.b;
  IntPolynomial quadratic = IntPolynomial::monomial(Integer(1), 2) - IntPolynomial::monomial(split * split, 0);
  return build_characteristic(params) == quadratic * qpq;
}

bool verify_factorization(const SeedPair& seed, Branch branch) {
  return verify_factorization(seed, branch, build_Qpq(seed).poly);
}

IntPolynomial reversed_substitution(const IntPolynomial& poly, const Integer& k) {
  const int n = poly.degree();
  if (n < 0) return {};
  std::vector<Integer> out(static_cast<std::size_t>(n) + 1, Integer(0));
  Integer kp = 1;
  for (int j = 0; j <= n; ++j) {
    out[static_cast<std::size_t>(n - j)] = poly.coeff(static_cast<std::size_t>(j)) * kp;
    kp *= k;
  }
  return IntPolynomial(std::move(out));
}

bool verify_reversion(const SeedPair& seed, const IntPolynomial& qpq, const IntPolynomial& qqp) {
  const Integer pq = seed.p() * seed.q();
  const Integer scale = pow(pq, 10);
  IntPolynomial lhs = qpq * scale;
  IntPolynomial rhs = reversed_substitution(qqp, pq * pq);
  return (lhs + rhs).is_zero() && rhs.degree() == 10;
}

bool verify_reversion(const SeedPair& seed) {
  return verify_reversion(seed, build_Qpq(seed).poly, build_Qpq(seed.swapped()).poly);
}

}  // namespace cuboid
