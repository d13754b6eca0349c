#include "cuboid/cuboid_filter.hpp"

#include "cuboid/asymptotics.hpp"
#include "cuboid/errors.hpp"

namespace cuboid {

RegionClass classify_region(const SeedPair& seed) {
  const Integer& p = seed.p();
  const Integer& q = seed.q();
  if (q < 59 * p && p < 59 * q) return RegionClass::linear;
  if (p >= 59 * q && p <= 9 * q * q * q) return RegionClass::nonlinear;
  return RegionClass::no_cuboid;
}

std::string to_string(RegionClass region) {
  switch (region) {
    case RegionClass::linear:
      return "linear";
    case RegionClass::nonlinear:
      return "nonlinear";
    case RegionClass::no_cuboid:
      return "no_cuboid";
  }
  return "unknown";
}

CuboidCandidate::CuboidCandidate(SeedPair seed, Integer t, Branch branch)
    : seed_(std::move(seed)), t_(std::move(t)), branch_(branch) {
  if (t_ <= 0) throw NotARoot("candidate t must be positive");
  if (build_Qpq(seed_).poly.evaluate(t_) != 0) {
    throw NotARoot("t = " + t_.get_str() + " is not a root of Q_pq");
  }
}

bool product_inequality_holds(const SeedPair& seed, const Integer& t) {
  const Integer& p = seed.p();
  const Integer& q = seed.q();
  return (p * p + t) * (p * q + t) > 2 * t * t;
}

bool admissible(const SeedPair& seed, const Integer& t) {
  const Integer& p = seed.p();
  const Integer& q = seed.q();
  return t > p * p && t > p * q && t > q * q && product_inequality_holds(seed, t);
}

bool admissible(const CuboidCandidate& candidate) { return admissible(candidate.seed(), candidate.t()); }

bool upper_bound_holds(const SeedPair& seed, const Integer& t) {
  const Integer& p = seed.p();
  const Integer& q = seed.q();
  const Integer lhs = 2 * t - p * p - p * q;
  if (lhs <= 0) return true;
  return lhs * lhs < p * p * (p * p + 6 * p * q + q * q);
}

Integer upper_bound_floor(const SeedPair& seed) {
  const Integer& p = seed.p();
  const Integer& q = seed.q();
  // 2t < p^2 + pq + p sqrt(D); the floor of sqrt(p^2 D) brackets the bound.
  const Integer root = integer_sqrt_floor(p * p * (p * p + 6 * p * q + q * q));
  Integer t = (p * p + p * q + root) / 2 + 1;
  while (!upper_bound_holds(seed, t)) --t;
  return t;
}

ExclusionReport exclusion_check(const SeedPair& seed) {
  if (!seed.large_p()) throw HypothesisNotMet("exclusion checks need p >= 59 q");
  const auto iv = forward_intervals(seed);
  const Integer& p = seed.p();
  const Integer& q = seed.q();
  ExclusionReport r;
  const QuadRational p2(Rational(p * p));
  r.second_interval_excluded = iv[1].hi < p2;
  r.first_margin = lemma_constants(seed).first_margin;
  r.first_interval_excluded = r.first_margin > 0;
  r.first_margin_at_least_3421q2 = r.first_margin >= Rational(3421 * q * q);
  r.third_interval_integer_points = integer_points(iv[2]);
  r.full_exclusion = p > 9 * q * q * q && r.third_interval_integer_points.empty();
  return r;
}

bool CuboidReconstruction::satisfies_cuboid_equations() const {
  for (const auto& r : residuals) {
    if (r != 0) return false;
  }
  return true;
}

CuboidReconstruction reconstruct_from_ratios(const Rational& alpha, const Rational& beta,
                                             const Rational& upsilon) {
  CuboidReconstruction out;
  out.alpha = alpha;
  out.beta = beta;
  out.upsilon = upsilon;
  const Rational a2 = alpha * alpha;
  const Rational b2 = beta * beta;
  const Rational u2 = upsilon * upsilon;
  const Rational degenerate = 1 - a2 * u2;
  if (degenerate == 0) throw DegenerateDenominator("1 - alpha^2 upsilon^2 vanishes");
  // 1 + u^2, 1 + b^2 and 1 + z^2 are positive for rational arguments.
  const Rational z = (1 + u2) * (1 - b2) * (1 + a2) / (2 * (1 + b2) * degenerate);
  out.z_param = z;
  const Rational z2 = z * z;
  const Rational one_u = 1 + u2;
  const Rational one_z = 1 + z2;
  out.x1 = 2 * upsilon / one_u;
  out.d1 = (1 - u2) / one_u;
  out.x2 = 2 * z * (1 - u2) / (one_u * one_z);
  out.x3 = (1 - u2) * (1 - z2) / (one_u * one_z);
  out.d2 = (one_u * one_z + 2 * z * (1 - u2)) / (one_u * one_z) * beta;
  out.d3 = 2 * (u2 * z2 + 1) / (one_u * one_z) * alpha;

  const Rational x1s = out.x1 * out.x1, x2s = out.x2 * out.x2, x3s = out.x3 * out.x3;
  out.residuals[0] = x1s + x2s + x3s - 1;
  out.residuals[1] = x2s + x3s - out.d1 * out.d1;
  out.residuals[2] = x3s + x1s - out.d2 * out.d2;
  out.residuals[3] = x1s + x2s - out.d3 * out.d3;

  Integer l = 1;
  for (const Rational* v : {&out.x1, &out.x2, &out.x3, &out.d1, &out.d2, &out.d3}) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v->get_den_mpz_t());
  }
  out.common_denominator = l;
  return out;
}

CuboidReconstruction reconstruct(const CuboidCandidate& candidate) {
  const CharParams params = params_for(candidate.seed(), candidate.branch());
  const Integer& t = candidate.t();
  CuboidReconstruction out = reconstruct_from_ratios(make_rational(params.a, t), make_rational(params.b, t),
                                                     make_rational(params.u, t));
  out.a = params.a;
  out.b = params.b;
  out.u = params.u;
  out.t = t;
  return out;
}

}  // namespace cuboid
