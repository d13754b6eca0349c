#include <doctest.h>

#include "cuboid/charpoly.hpp"
#include "cuboid/errors.hpp"
#include "oracle.hpp"

using namespace cuboid;

namespace {

IntPolynomial from(std::initializer_list<long> c) { return IntPolynomial(c); }

}  // namespace

TEST_CASE("seed validation") {
  CHECK_NOTHROW(SeedPair(2, 1));
  CHECK_THROWS_AS(SeedPair(118, 2), InvalidSeed);
  CHECK_THROWS_AS(SeedPair(177, 3), InvalidSeed);
  CHECK_THROWS_AS(SeedPair(3, 3), InvalidSeed);
  CHECK_THROWS_AS(SeedPair(0, 1), InvalidSeed);
  CHECK_THROWS_AS(SeedPair(-2, 1), InvalidSeed);
  CHECK(SeedPair(59, 1).large_p());
  CHECK_FALSE(SeedPair(58, 1).large_p());
}

TEST_CASE("characteristic polynomial values") {
  CHECK(build_characteristic({1, 1, 1}) == from({1, 0, 2, 0, -1, 0, -4, 0, -1, 0, 2, 0, 1}));
  const IntPolynomial c = build_characteristic({2, 4, 1});
  CHECK(c == from({4096, 0, 22016, 0, 8720, 0, -1480, 0, -415, 0, -34, 0, 1}));
  CHECK(c.coeff(0) == 4096);
  CHECK(c.coeff(11) == 0);
  CHECK(c.degree() == 12);
  CHECK(c.leading() == 1);
}

TEST_CASE("reduced polynomial values") {
  const CuboidPolynomial q21 = build_Qpq(SeedPair(2, 1));
  CHECK(q21.poly == from({-1024, 0, -5760, 0, -3620, 0, -535, 0, -30, 0, 1}));
  CHECK(q21.poly.evaluate(Integer(1)) == -10968);
  CHECK(q21.half == from({-1024, -5760, -3620, -535, -30, 1}));
  CHECK(q21.poly.coeff(9) == 0);

  const CuboidPolynomial q12 = build_Qpq(SeedPair(1, 2));
  CHECK(q12.half == from({-1024, 1920, 2140, 905, 90, 1}));
  CHECK(q12.poly.evaluate(Integer(4)) == 11231232);

  CHECK(build_Qpq(SeedPair(3, 2)).poly ==
        from({-60466176, 0, -19502208, 0, -1191492, 0, -23063, 0, -102, 0, 1}));
}

TEST_CASE("grouped construction matches the expanded oracle") {
  for (long p = 1; p <= 40; ++p) {
    for (long q = 1; q <= 40; ++q) {
      if (!is_valid_seed(p, q)) continue;
      CHECK(build_Qpq(SeedPair(p, q)).poly == oracle::expand_Qpq(p, q));
    }
  }
}

TEST_CASE("factorization identities") {
  CHECK(verify_factorization(SeedPair(2, 1), Branch::first));
  CHECK(verify_factorization(SeedPair(3, 2), Branch::second));
  IntPolynomial bad = build_Qpq(SeedPair(2, 1)).poly;
  bad += IntPolynomial::monomial(Integer(1), 2);
  CHECK_FALSE(verify_factorization(SeedPair(2, 1), Branch::first, bad));
  CHECK_FALSE(verify_factorization(SeedPair(2, 1), Branch::second, bad));
  const CharParams first = params_for(SeedPair(5, 3), Branch::first);
  CHECK(first.b * first.u == first.a * first.a);
  const CharParams second = params_for(SeedPair(5, 3), Branch::second);
  CHECK(second.a * second.u == second.b * second.b);
}

TEST_CASE("reversion identity") {
  CHECK(verify_reversion(SeedPair(2, 1)));
  // Spot values: -Q_12(4) / 2^10 == Q_21(1).
  const Integer lhs = -build_Qpq(SeedPair(1, 2)).poly.evaluate(Integer(4));
  CHECK(lhs % 1024 == 0);
  CHECK(lhs / 1024 == build_Qpq(SeedPair(2, 1)).poly.evaluate(Integer(1)));
  const IntPolynomial rev = reversed_substitution(build_Qpq(SeedPair(1, 2)).poly, Integer(4));
  CHECK(rev.degree() == 10);
}

TEST_CASE("identities over the grid p, q <= 50") {
  int checked = 0;
  for (long p = 1; p <= 50; ++p) {
    for (long q = 1; q <= 50; ++q) {
      if (!is_valid_seed(p, q)) continue;
      const SeedPair seed(p, q);
      const CuboidPolynomial cp = build_Qpq(seed);
      CHECK(verify_factorization(seed, Branch::first, cp.poly));
      CHECK(verify_factorization(seed, Branch::second, cp.poly));
      CHECK(verify_reversion(seed));
      CHECK(cp.poly.degree() == 10);
      CHECK(cp.poly.leading() == 1);
      CHECK(cp.half.compose_square() == cp.poly);
      CHECK(cp.half.coeff(0) < 0);
      for (int k = 1; k < 12; k += 2) {
        CHECK(build_characteristic(params_for(seed, Branch::first)).coeff(k) == 0);
      }
      CHECK(build_Qpq(seed.swapped()).poly == oracle::expand_Qpq(q, p));
      ++checked;
    }
  }
  CHECK(checked == 1546);
}

TEST_CASE("half polynomial rejects odd terms") {
  CHECK_THROWS_AS(half_polynomial(from({1, 1, 1})), OddTermPresent);
  CHECK(half_polynomial(from({3, 0, 2, 0, 1})) == from({3, 2, 1}));
}
