#pragma once

#include <vector>

#include "cuboid/exact.hpp"
#include "cuboid/polynomial.hpp"

namespace cuboid {

// Half-open rational interval (lo, hi] holding exactly one simple root of the
// polynomial it was isolated for.
struct IsolatingInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo < x && x <= hi; }
  friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

using SturmChain = std::vector<IntPolynomial>;

// Canonical chain p, p', -prem(...), ... with each member reduced to its
// primitive part (positive scaling only, so sign variations are unchanged).
SturmChain sturm_sequence(const IntPolynomial& poly);

// Sign variations of the chain at x, zeros skipped.
int sign_variations(const SturmChain& chain, const Rational& x);
int sign_variations_at_infinity(const SturmChain& chain, bool positive_side);

// Number of distinct real roots in (lo, hi]. Endpoints that are roots of the
// first chain member are handled exactly through the zero-skipping variation
// count; EndpointIsRoot is raised only when every member of the chain
// vanishes there (a multiple root sitting on the endpoint).
int count_roots(const SturmChain& chain, const Rational& lo, const Rational& hi);
int count_real_roots(const SturmChain& chain);

// Disjoint isolating intervals, each of width <= width, covering every root
// of poly in region, sorted ascending. Bisection only, so all endpoints are
// dyadic refinements of the region endpoints.
std::vector<IsolatingInterval> isolate_roots(const IntPolynomial& poly,
                                             const IsolatingInterval& region,
                                             const Rational& width);

// Shrinks an isolating interval of a squarefree poly until width <= width.
IsolatingInterval refine_root(const IntPolynomial& poly, IsolatingInterval iv,
                              const Rational& width);

}  // namespace cuboid
