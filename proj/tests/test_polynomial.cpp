#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cuboid/charpoly.hpp"
#include "cuboid/errors.hpp"
#include "cuboid/polynomial.hpp"
#include "cuboid/sturm.hpp"
#include "oracle.hpp"

using namespace cuboid;

namespace {

const IntPolynomial kSqrt2{-2, 0, 1};

IsolatingInterval iv(long lo, long hi) { return {Rational(lo), Rational(hi)}; }

}  // namespace

TEST_CASE("polynomial evaluation") {
  CHECK(poly_eval(IntPolynomial{}, Rational(7)) == 0);
  const IntPolynomial q21 = build_Qpq(SeedPair(2, 1)).poly;
  CHECK(poly_eval(q21, Rational(1)) == -10968);
  CHECK(poly_eval(q21, Rational(0)) == -1024);
  CHECK(IntPolynomial{1, 2, 3}.evaluate(Rational(1, 2)) == Rational(11, 4));
}

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial a{1, 1};
  CHECK(a * a == IntPolynomial{1, 2, 1});
  CHECK((a * a - a * a).is_zero());
  CHECK(IntPolynomial{3, 0, 5}.derivative() == IntPolynomial{0, 10});
  CHECK(IntPolynomial{6, -4, 8}.content() == 2);
  CHECK(IntPolynomial{-6, 4, -8}.primitive_part() == IntPolynomial{3, -2, 4});
  CHECK(IntPolynomial{1, 2}.compose_square() == IntPolynomial{1, 0, 2});
  CHECK(IntPolynomial{1, 2}.reflect() == IntPolynomial{1, -2});
  CHECK(IntPolynomial{0, 0, 1}.degree() == 2);
  CHECK(IntPolynomial{}.degree() == -1);
}

TEST_CASE("pseudo remainder and gcd") {
  // x^3 - 1 = (x - 1)(x^2 + x + 1); x^2 - 1 = (x - 1)(x + 1).
  const IntPolynomial g = gcd(IntPolynomial{-1, 0, 0, 1}, IntPolynomial{-1, 0, 1});
  CHECK(g == IntPolynomial{-1, 1});
  CHECK(pseudo_remainder(IntPolynomial{1, 0, 1}, IntPolynomial{1, 2}) == IntPolynomial{5});
  CHECK(is_squarefree(oracle::planted({1, 2, 3})));
  CHECK_FALSE(is_squarefree(oracle::planted({1, 1, 3})));
}

TEST_CASE("sturm chains") {
  const SturmChain c = sturm_sequence(IntPolynomial::x());
  REQUIRE(c.size() == 2);
  CHECK(c[0] == IntPolynomial::x());
  CHECK(c[1] == IntPolynomial{1});

  const SturmChain s = sturm_sequence(kSqrt2);
  CHECK(count_roots(s, Rational(0), Rational(2)) == 1);
  CHECK(count_roots(s, Rational(-2), Rational(0)) == 1);
  CHECK(count_roots(s, Rational(2), Rational(3)) == 0);
  CHECK(count_real_roots(s) == 2);
}

TEST_CASE("root counts at endpoints that are roots") {
  const IntPolynomial p = oracle::planted({1, 2, 3});
  const SturmChain s = sturm_sequence(p);
  CHECK(count_roots(s, Rational(1), Rational(3)) == 2);  // (1, 3] holds 2 and 3
  CHECK(count_roots(s, Rational(0), Rational(1)) == 1);
  // A square factor leaves a common zero of every chain member.
  const SturmChain d = sturm_sequence(oracle::planted({2, 2}));
  CHECK_THROWS_AS(count_roots(d, Rational(2), Rational(5)), EndpointIsRoot);
}

TEST_CASE("isolation of classical roots") {
  const auto r = isolate_roots(kSqrt2, iv(0, 2), Rational(1, 1024));
  REQUIRE(r.size() == 1);
  CHECK(r[0].width() <= Rational(1, 1024));
  CHECK(r[0].lo * r[0].lo < 2);
  CHECK(r[0].hi * r[0].hi > 2);

  const auto three = isolate_roots(oracle::planted({1, 2, 3}), iv(0, 4), Rational(1, 64));
  REQUIRE(three.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(three[k].contains(Rational(k + 1)));
  CHECK(three[0].hi <= three[1].lo);
  CHECK(three[1].hi <= three[2].lo);

  CHECK_THROWS_AS(isolate_roots(oracle::planted({1, 1}), iv(0, 4), Rational(1, 8)), NotSquarefree);
}

TEST_CASE("half-polynomial of Q_59,1 has three positive and two negative roots") {
  const IntPolynomial half = build_Qpq(SeedPair(59, 1)).half;
  const SturmChain s = sturm_sequence(half);
  const Integer b = cauchy_bound(half);
  CHECK(count_roots(s, Rational(0), Rational(b)) == 3);
  CHECK(count_roots(s, Rational(-b), Rational(0)) == 2);
  // The two largest y-roots are near 1.13e7 and 1.29e7, beyond 1e7.
  const auto roots = isolate_roots(half, iv(-100000000, 100000000), Rational(1, 16));
  CHECK(roots.size() == 5);
  CHECK(std::count_if(roots.begin(), roots.end(), [](const auto& r) { return r.lo >= 0; }) == 3);
  CHECK(isolate_roots(half, iv(-10000000, 10000000), Rational(1, 16)).size() == 3);
}

TEST_CASE("planted rational roots are recovered") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 6);
  std::uniform_int_distribution<int> deg(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<Rational> planted;
    IntPolynomial p{1};
    const int n = deg(rng);
    while (static_cast<int>(planted.size()) < n) {
      const Rational r = make_rational(Integer(num(rng)), Integer(den(rng)));
      if (!planted.insert(r).second) continue;
      p *= IntPolynomial(std::vector<Integer>{-r.get_num(), r.get_den()});
    }
    // An irreducible quadratic factor adds no real roots.
    if (trial % 3 == 0) p *= IntPolynomial{1, 0, 1};
    const Integer b = cauchy_bound(p);
    const auto found = isolate_roots(p, {Rational(-b), Rational(b)}, Rational(1, 4096));
    REQUIRE(found.size() == planted.size());
    auto it = planted.begin();
    for (const auto& f : found) {
      CHECK(f.contains(*it));
      CHECK(f.width() <= Rational(1, 4096));
      ++it;
    }
    CHECK(count_real_roots(sturm_sequence(p)) == static_cast<int>(planted.size()));
    CHECK(count_roots(sturm_sequence(p), Rational(-b), Rational(b)) == static_cast<int>(planted.size()));
  }
}

TEST_CASE("root refinement narrows without losing the root") {
  IsolatingInterval r{Rational(1), Rational(2)};
  r = refine_root(kSqrt2, r, Rational(1, 1 << 20));
  CHECK(r.width() <= Rational(1, 1 << 20));
  CHECK(r.lo * r.lo < 2);
  CHECK(r.hi * r.hi >= 2);
}
