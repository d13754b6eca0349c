#include "cuboid/sturm.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "cuboid/errors.hpp"

namespace cuboid {

SturmChain sturm_sequence(const IntPolynomial& poly) {
  if (poly.is_zero()) throw std::invalid_argument("sturm_sequence of the zero polynomial");
  SturmChain chain;
  chain.push_back(poly);
  if (poly.degree() == 0) return chain;
  chain.push_back(poly.derivative().primitive_part());
  while (true) {
    const IntPolynomial& a = chain[chain.size() - 2];
    const IntPolynomial& b = chain.back();
    IntPolynomial r = -pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // Divide by the positive content only; the sign must survive.
    Integer g = r.content();
    std::vector<Integer> c = r.coeffs();
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    chain.emplace_back(std::move(c));
    if (chain.back().degree() == 0) break;
  }
  return chain;
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int sign_variations(const SturmChain& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  bool all_zero = true;
  for (const auto& p : chain) {
    signs.push_back(p.sign_at(x));
    all_zero = all_zero && signs.back() == 0;
  }
  if (all_zero) throw EndpointIsRoot("every Sturm chain member vanishes at " + to_string(x));
  return count_variations(signs);
}

int sign_variations_at_infinity(const SturmChain& chain, bool positive_side) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(p.sign_at_infinity(positive_side));
  return count_variations(signs);
}

int count_roots(const SturmChain& chain, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("count_roots requires lo < hi");
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int count_real_roots(const SturmChain& chain) {
  return sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
}

IsolatingInterval refine_root(const IntPolynomial& poly, IsolatingInterval iv,
                              const Rational& width) {
  if (!(width > 0)) throw std::invalid_argument("refine_root requires width > 0");
  // A simple root in (lo, hi]: either hi is the root or the signs differ.
  int s_hi = poly.sign_at(iv.hi);
  while (iv.width() > width) {
    if (s_hi == 0) {
      // Root sits on hi; pull lo towards it.
      iv.lo = (iv.lo + iv.hi) / 2;
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    int s_mid = poly.sign_at(mid);
    // The sign on (root, hi] equals s_hi and flips below the root.
    if (s_mid == 0 || s_mid == s_hi) {
      iv.hi = mid;
      s_hi = s_mid;
    } else {
      iv.lo = mid;
    }
  }
  return iv;
}

std::vector<IsolatingInterval> isolate_roots(const IntPolynomial& poly,
                                             const IsolatingInterval& region,
                                             const Rational& width) {
  if (!(region.lo < region.hi)) throw std::invalid_argument("isolate_roots: empty region");
  if (!(width > 0)) throw std::invalid_argument("isolate_roots requires width > 0");
  if (poly.is_zero()) throw std::invalid_argument("isolate_roots of the zero polynomial");
  if (!is_squarefree(poly)) throw NotSquarefree("polynomial shares a factor with its derivative");

  const SturmChain chain = sturm_sequence(poly);
  std::vector<IsolatingInterval> found;
  struct Pending {
    IsolatingInterval iv;
    int v_lo;
    int v_hi;
  };
  std::vector<Pending> stack;
  stack.push_back({region, sign_variations(chain, region.lo), sign_variations(chain, region.hi)});
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    const int n = cur.v_lo - cur.v_hi;
    if (n == 0) continue;
    if (n == 1) {
      found.push_back(refine_root(poly, cur.iv, width));
      continue;
    }
    Rational mid = (cur.iv.lo + cur.iv.hi) / 2;
    int v_mid = sign_variations(chain, mid);
    // Upper half first so the lower half is processed next (stack order).
    stack.push_back({{mid, cur.iv.hi}, v_mid, cur.v_hi});
    stack.push_back({{cur.iv.lo, mid}, cur.v_lo, v_mid});
  }
  std::sort(found.begin(), found.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
  return found;
}

}  // namespace cuboid
