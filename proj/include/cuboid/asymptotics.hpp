#pragma once

#include <string>
#include <vector>

#include "cuboid/charpoly.hpp"
#include "cuboid/exact.hpp"
#include "cuboid/quad_rational.hpp"
#include "cuboid/tri_polynomial.hpp"

namespace cuboid {

enum class Axis { real, imaginary };

// Roots 1..3 are the positive real roots (ascending), 4..5 the roots on the
// positive imaginary axis (descending imaginary part). Indices 6..10 name the
// mirrored roots -t_1 .. -t_5.
struct RootLabel {
  int index = 1;

  Axis axis() const { return ((index - 1) % 5) < 3 ? Axis::real : Axis::imaginary; }
  RootLabel mirrored() const { return {index <= 5 ? index + 5 : index - 5}; }
  std::string name() const { return "t" + std::to_string(index); }
  friend bool operator==(const RootLabel&, const RootLabel&) = default;
};

// Q_pq itself, or the swapped polynomial Q_qp.
enum class Target { forward, reverse };

// Open interval (lo, hi) on the label's axis; for imaginary labels the bounds
// apply to the imaginary part. Real intervals have rational endpoints.
struct AsymptoticInterval {
  RootLabel label;
  QuadRational lo;
  QuadRational hi;
  Target target = Target::forward;

  bool contains(const QuadRational& x) const { return lo < x && x < hi; }
};

// The five intervals locating the roots of Q_qp for p >= 59 q.
// Throws HypothesisNotMet otherwise.
std::vector<AsymptoticInterval> reverse_intervals(const SeedPair& seed);

// The five intervals locating the roots of Q_pq for p >= 59 q.
std::vector<AsymptoticInterval> forward_intervals(const SeedPair& seed);

// Image of the reverse interval around qp under t = p^2 q^2 / t~; the source
// of the first forward interval's asymptotic expansion.
AsymptoticInterval first_root_image_interval(const SeedPair& seed);

// --- shifted equations -------------------------------------------------------

using ShiftPolynomial = TriPolynomial<QuadRational>;

// A polynomial in q scaled by a rational constant: coeff * q^power.
struct QMonomial {
  Rational coeff;
  unsigned power = 0;

  Rational at(const Integer& q) const { return coeff * Rational(pow(q, static_cast<unsigned long>(power))); }
};

// How the cleared equation is split in print: constant + residual = slope * c,
// with the residual bounded by |residual| < bound on the c-range.
struct ClaimedSplit {
  QMonomial constant;
  QMonomial slope;
  QMonomial bound;
  std::string description;
};

struct ShiftedEquation {
  RootLabel label;
  // G(c, q, z), the cleared image of Q_pq under the label's substitution and
  // p = 1/z. Coefficients are integers for real labels and lie in Z[sqrt 2]
  // for imaginary ones.
  ShiftPolynomial lhs;
  // Power of z that cleared the denominators.
  int z_power = 0;
  QMonomial c_lo;
  QMonomial c_hi;
  ClaimedSplit claim;

  QuadRational evaluate(const Rational& c, const Integer& q, const Rational& z) const;
};

// Substitutes the label's shifted root expression and p = 1/z into Q_pq and
// multiplies by the minimal z-power clearing negative exponents. Imaginary
// labels go through the half-polynomial with y = -s^2.
ShiftedEquation derive_shifted_equation(RootLabel label);

// The label's substitution t = t(c, q, z) (for imaginary labels, the
// imaginary part s(c, q, z)).
ShiftPolynomial shifted_root_expression(RootLabel label);

// True iff G(c_lo) and G(c_hi) at z = 1/p have strictly opposite signs.
// Throws ZeroAtEndpoint when G vanishes at a c-range endpoint and
// HypothesisNotMet unless p >= 59 q.
bool sign_change_check(const ShiftedEquation& eq, const SeedPair& seed);

struct BoundSample {
  Rational c;
  QuadRational residual;
  bool pass = false;
};

struct BoundReport {
  RootLabel label;
  // G = normalization * (constant + residual - slope * c); the printed split
  // corresponds to normalization 1.
  QuadRational normalization;
  Rational bound;
  std::vector<BoundSample> samples;
  QuadRational max_abs_residual;
  bool all_pass = false;
  // max |residual| / bound as a double, for reporting only.
  double observed_ratio = 0.0;
};

BoundReport bound_check(const ShiftedEquation& eq, const SeedPair& seed, unsigned samples);

// --- interval geometry -------------------------------------------------------

struct DisjointnessReport {
  // Lower endpoints on each label's axis (all must be positive).
  std::vector<QuadRational> lower_endpoints;
  QuadRational gap_first_second;  // left(t2) - right(t1)
  QuadRational gap_second_third;  // left(t3) - right(t2), equals 4 q p
  QuadRational gap_imaginary;     // bottom(t4) - top(t5)

  bool all_positive() const;
  bool disjoint() const;
};

DisjointnessReport disjointness_report(const SeedPair& seed);
bool check_disjointness(const SeedPair& seed);

// Integers strictly inside a real interval. Throws std::invalid_argument for
// imaginary intervals.
std::vector<Integer> integer_points(const AsymptoticInterval& interval);
std::vector<Integer> integer_points(const Rational& lo, const Rational& hi);

// Hypotheses under which the asymptotic intervals are integer-free or nearly.
struct IntegerPointHypotheses {
  bool outer_real_integer_free = false;    // p > 9 q^3: no integers near t2, t3
  bool first_at_most_one = false;          // p^2 > 10 q^4: at most one near t1
  bool first_integer_free = false;         // 16 p >= 256 q^3 + 5 q: none near t1
};

IntegerPointHypotheses integer_point_hypotheses(const SeedPair& seed);

// Exact values of the worked lemma constants, for p >= 59 q.
struct LemmaConstants {
  Rational third_left;        // (p + q)^2 - 3 q^2, at least 3597 q^2
  Rational second_third_gap;  // 4 q p
  Rational first_margin;      // (p - q/2)^2 - q^2/4 - 16 q^3/p - 5 q^4/p^2, at least 3421 q^2
};

LemmaConstants lemma_constants(const SeedPair& seed);

std::string to_string(Axis axis);
std::string to_string(Target target);

}  // namespace cuboid
