#pragma once

#include <vector>

#include "cuboid/asymptotics.hpp"
#include "cuboid/charpoly.hpp"
#include "cuboid/sturm.hpp"

namespace cuboid {

struct IsolatedRoot {
  RootLabel label;
  // On the root's axis: t for real roots, Im t for imaginary roots.
  IsolatingInterval interval;
  // Interval of y = t^2 (so y = -(Im t)^2 on the imaginary axis) on which the
  // half-polynomial has exactly one root.
  IsolatingInterval y_interval;
  SeedPair seed;
  Target target = Target::forward;
  // Whether interval lies inside the label's predicted asymptotic interval.
  bool contained = false;
};

struct CertifyOptions {
  // Throw ContainmentFailure when a root misses its predicted interval.
  bool require_containment = true;
};

// Isolates the five roots obeying t > 0 (real) or Im t > 0 (imaginary) and
// labels them by the ordering t1 < t2 < t3, Im t4 > Im t5. Forward
// certification for p >= 59 q; for q >= 59 p the seed's polynomial is the
// reverse polynomial of the swapped seed and is checked against the reverse
// intervals. Throws HypothesisNotMet otherwise.
std::vector<IsolatedRoot> certify_roots(const SeedPair& seed, const Rational& width,
                                        CertifyOptions options = {});

// The mirrored roots -t1 .. -t5 appended to the five certified ones.
std::vector<IsolatedRoot> opposite_roots(const std::vector<IsolatedRoot>& roots);

struct CorrespondencePair {
  RootLabel forward;
  RootLabel reverse;
  // Open-closed product interval (lo, hi] of the two roots' magnitudes.
  Rational product_lo;
  Rational product_hi;
  bool contains = false;
};

// Pairs t1~t3', t2~t2', t3~t1', t4~t5', t5~t4' (primes: roots of Q_qp) and
// checks that each product interval contains p^2 q^2.
std::vector<CorrespondencePair> correspondence_report(const SeedPair& seed, const Rational& width);
bool verify_correspondence(const SeedPair& seed, const Rational& width);

}  // namespace cuboid
