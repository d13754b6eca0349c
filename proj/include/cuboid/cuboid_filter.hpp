#pragma once

#include <array>
#include <string>
#include <vector>

#include "cuboid/charpoly.hpp"
#include "cuboid/exact.hpp"

namespace cuboid {

// Partition of the positive (p, q) quadrant:
//   linear     q/59 < p < 59 q
//   nonlinear  59 q <= p <= 9 q^3
//   no_cuboid  everything else (p >= 59 q with p > 9 q^3, or q >= 59 p)
enum class RegionClass { linear, nonlinear, no_cuboid };

RegionClass classify_region(const SeedPair& seed);
std::string to_string(RegionClass region);

// Positive integer root t of Q_pq. Construction verifies the root exactly.
class CuboidCandidate {
 public:
  // Throws NotARoot unless t > 0 and Q_pq(t) == 0.
  CuboidCandidate(SeedPair seed, Integer t, Branch branch);

  const SeedPair& seed() const { return seed_; }
  const Integer& t() const { return t_; }
  Branch branch() const { return branch_; }

 private:
  SeedPair seed_;
  Integer t_;
  Branch branch_;
};

// t > p^2, t > pq, t > q^2 and (p^2 + t)(pq + t) > 2 t^2, in exact integers.
// Root-ness is not checked here, so the inequalities can be probed directly.
bool admissible(const SeedPair& seed, const Integer& t);
bool admissible(const CuboidCandidate& candidate);

// The last inequality alone.
bool product_inequality_holds(const SeedPair& seed, const Integer& t);

// t < (p^2 + pq)/2 + p sqrt(p^2 + 6pq + q^2)/2, compared after squaring.
bool upper_bound_holds(const SeedPair& seed, const Integer& t);

// Largest integer satisfying upper_bound_holds.
Integer upper_bound_floor(const SeedPair& seed);

struct ExclusionReport {
  // Right end of the t2 interval lies below p^2, so t > p^2 cannot hold there.
  bool second_interval_excluded = false;
  // (p - q/2)^2 - q^2/4 - 16 q^3/p - 5 q^4/p^2; positive excludes the t1 interval.
  Rational first_margin;
  bool first_interval_excluded = false;
  bool first_margin_at_least_3421q2 = false;
  // p > 9 q^3: the t3 interval is integer-free, so every root is excluded.
  bool full_exclusion = false;
  std::vector<Integer> third_interval_integer_points;
};

// Requires p >= 59 q (HypothesisNotMet otherwise).
ExclusionReport exclusion_check(const SeedPair& seed);

struct CuboidReconstruction {
  Integer a, b, u, t;
  Rational alpha, beta, upsilon;
  Rational z_param;
  // Edges and diagonals per unit space diagonal L.
  Rational x1, x2, x3;
  Rational d1, d2, d3;
  // Left minus right side of the four cuboid equations, per unit L^2.
  std::array<Rational, 4> residuals;
  // Least common denominator of the six ratios; scaling by it gives integers.
  Integer common_denominator;

  bool satisfies_cuboid_equations() const;
};

// Throws DegenerateDenominator when alpha^2 upsilon^2 = 1.
CuboidReconstruction reconstruct_from_ratios(const Rational& alpha, const Rational& beta,
                                             const Rational& upsilon);
CuboidReconstruction reconstruct(const CuboidCandidate& candidate);

}  // namespace cuboid
