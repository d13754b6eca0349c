#include "cuboid/asymptotics.hpp"

#include <stdexcept>

#include "cuboid/errors.hpp"

namespace cuboid {

namespace {

void require_large_p(const SeedPair& seed) {
  if (!seed.large_p()) {
    throw HypothesisNotMet("requires p >= 59 q, got p = " + seed.p().get_str() +
                           ", q = " + seed.q().get_str());
  }
}

Rational rat(const Integer& n) { return Rational(n); }

QuadRational abs(const QuadRational& x) { return x.sign() < 0 ? -x : x; }

AsymptoticInterval make(int index, QuadRational lo, QuadRational hi, Target target) {
  return {RootLabel{index}, std::move(lo), std::move(hi), target};
}

}  // namespace

std::vector<AsymptoticInterval> reverse_intervals(const SeedPair& seed) {
  require_large_p(seed);
  const Rational p = rat(seed.p());
  const Rational q = rat(seed.q());
  const Rational q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
  const Rational p2 = p * p;
  const QuadRational r2 = QuadRational::sqrt2();
  const Rational small = 5 * q3 / p;
  const Rational centre3 = q * p - 16 * q3 / p;
  const Rational half3 = 5 * q4 / p2;
  const QuadRational centre4 = (r2 + 1) * p2 + (r2 - 2) * q2;
  const QuadRational centre5 = (r2 - 1) * p2 + (r2 + 2) * q2;
  std::vector<AsymptoticInterval> out;
  out.push_back(make(1, q2 - small, q2, Target::reverse));
  out.push_back(make(2, q2, q2 + small, Target::reverse));
  out.push_back(make(3, centre3 - half3, centre3 + half3, Target::reverse));
  out.push_back(make(4, centre4 - small, centre4 + small, Target::reverse));
  out.push_back(make(5, centre5 - small, centre5 + small, Target::reverse));
  return out;
}

std::vector<AsymptoticInterval> forward_intervals(const SeedPair& seed) {
  require_large_p(seed);
  const Rational p = rat(seed.p());
  const Rational q = rat(seed.q());
  const Rational q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
  const Rational p2 = p * p;
  const QuadRational r2 = QuadRational::sqrt2();
  const Rational centre1 = p * q + 16 * q3 / p;
  const Rational half1 = 5 * q4 / p2;
  const Rational right2 = p2 - 2 * q * p - 2 * q2;
  const Rational left3 = p2 + 2 * q * p - 2 * q2;
  const Rational edge23 = 9 * q3 / p;
  const QuadRational centre4 = (r2 + 1) * q2;
  const QuadRational centre5 = (r2 - 1) * q2;
  const Rational half45 = 5 * q3 / p2;
  std::vector<AsymptoticInterval> out;
  out.push_back(make(1, centre1 - half1, centre1 + half1, Target::forward));
  out.push_back(make(2, right2 - edge23, right2, Target::forward));
  out.push_back(make(3, left3, left3 + edge23, Target::forward));
  out.push_back(make(4, centre4 - half45, centre4 + half45, Target::forward));
  out.push_back(make(5, centre5 - half45, centre5 + half45, Target::forward));
  return out;
}

AsymptoticInterval first_root_image_interval(const SeedPair& seed) {
  require_large_p(seed);
  const Rational p = rat(seed.p());
  const Rational q = rat(seed.q());
  const Rational num = p * p * p * p * q;
  const Rational base = p * p * p - 16 * q * q * p;
  const Rational shift = 5 * q * q * q;
  return make(1, num / (base + shift), num / (base - shift), Target::forward);
}

// --- shifted equations -------------------------------------------------------

QuadRational ShiftedEquation::evaluate(const Rational& c, const Integer& q, const Rational& z) const {
  return lhs.evaluate<QuadRational>(QuadRational(c), QuadRational(rat(q)), QuadRational(z));
}

ShiftPolynomial shifted_root_expression(RootLabel label) {
  using P = ShiftPolynomial;
  const P c = P::variable(P::kC);
  const P q = P::variable(P::kQ);
  const P z = P::variable(P::kZ);
  const P z_inv = P::variable(P::kZ, -1);
  const P z2 = P::variable(P::kZ, 2);
  const P q2 = q * q;
  const QuadRational r2 = QuadRational::sqrt2();
  switch (label.index) {
    case 1:  // pq + 16 q^3/p + c/p^2
      return q * z_inv + P(QuadRational(16L)) * q2 * q * z + c * z2;
    case 2:  // p^2 - 2qp - 2q^2 + c/p
      return z_inv * z_inv - P(QuadRational(2L)) * q * z_inv - P(QuadRational(2L)) * q2 + c * z;
    case 3:  // p^2 + 2qp - 2q^2 + c/p
      return z_inv * z_inv + P(QuadRational(2L)) * q * z_inv - P(QuadRational(2L)) * q2 + c * z;
    case 4:  // Im t = (sqrt2 + 1) q^2 + c/p^2
      return P(r2 + 1) * q2 + c * z2;
    case 5:  // Im t = (sqrt2 - 1) q^2 + c/p^2
      return P(r2 - 1) * q2 + c * z2;
    default:
      throw std::invalid_argument("shifted equations exist for labels 1..5 only");
  }
}

namespace {

ClaimedSplit claim_for(int index) {
  switch (index) {
    case 1:
      return {{0, 0}, {-2, 5}, {3, 9}, "f(c,q,z) = -2 q^5 c, |f| < 3 q^9"};
    case 2:
      return {{80, 4}, {-16, 1}, {52, 4}, "80 q^4 + phi(c,q,z) = -16 q c, |phi| < 52 q^4"};
    case 3:
      return {{80, 4}, {16, 1}, {52, 4}, "80 q^4 + psi(c,q,z) = 16 q c, |psi| < 52 q^4"};
    case 4:
      return {{0, 0}, {16, 0}, {14, 3}, "eta(c,q,z) = 16 c, |eta| < 14 q^3"};
    default:
      return {{0, 0}, {16, 0}, {14, 3}, "zeta(c,q,z) = 16 c, |zeta| < 14 q^3"};
  }
}

}  // namespace

ShiftedEquation derive_shifted_equation(RootLabel label) {
  if (label.index < 1 || label.index > 5) {
    throw std::invalid_argument("shifted equations exist for labels 1..5 only");
  }
  using P = ShiftPolynomial;
  const auto groups = qpq_groups<P>(P::variable(P::kZ, -1), P::variable(P::kQ));
  const P expr = shifted_root_expression(label);
  // Q_pq(t) = sum_k g_k t^(2k) = P(y) with y = t^2, or y = -s^2 for t = i s.
  const P y = label.axis() == Axis::real ? expr * expr : -(expr * expr);
  P acc = groups[5];
  for (int k = 4; k >= 0; --k) acc = acc * y + groups[static_cast<std::size_t>(k)];
  auto [z_power, cleared] = acc.clear_denominators(P::kZ);

  ShiftedEquation eq;
  eq.label = label;
  eq.lhs = std::move(cleared);
  eq.z_power = z_power;
  switch (label.index) {
    case 1:
      eq.c_lo = {-5, 4};
      eq.c_hi = {5, 4};
      break;
    case 2:
      eq.c_lo = {-9, 3};
      eq.c_hi = {0, 3};
      break;
    case 3:
      eq.c_lo = {0, 3};
      eq.c_hi = {9, 3};
      break;
    default:
      eq.c_lo = {-5, 3};
      eq.c_hi = {5, 3};
      break;
  }
  eq.claim = claim_for(label.index);
  return eq;
}

bool sign_change_check(const ShiftedEquation& eq, const SeedPair& seed) {
  require_large_p(seed);
  const Rational z = make_rational(Integer(1), seed.p());
  const int s_lo = eq.evaluate(eq.c_lo.at(seed.q()), seed.q(), z).sign();
  const int s_hi = eq.evaluate(eq.c_hi.at(seed.q()), seed.q(), z).sign();
  if (s_lo == 0 || s_hi == 0) {
    throw ZeroAtEndpoint("shifted equation for " + eq.label.name() +
                         " vanishes at a c-range endpoint");
  }
  return s_lo != s_hi;
}

BoundReport bound_check(const ShiftedEquation& eq, const SeedPair& seed, unsigned samples) {
  require_large_p(seed);
  if (samples < 2) throw std::invalid_argument("bound_check needs at least two samples");
  const Integer& q = seed.q();
  const Rational z = make_rational(Integer(1), seed.p());

  // Coefficient of c^1 z^0 in G, as a number at this q.
  QuadRational linear(0L);
  for (const auto& [e, coef] : eq.lhs.terms()) {
    if (e[ShiftPolynomial::kC] == 1 && e[ShiftPolynomial::kZ] == 0) {
      linear += coef * QuadRational(Rational(pow(q, static_cast<unsigned long>(e[ShiftPolynomial::kQ]))));
    }
  }
  const Rational slope = eq.claim.slope.at(q);
  if (linear == QuadRational(0L) || slope == 0) {
    throw std::logic_error("shifted equation has no linear term to normalize against");
  }

  BoundReport report;
  report.label = eq.label;
  report.normalization = linear / QuadRational(-slope);
  report.bound = eq.claim.bound.at(q);
  report.all_pass = true;
  const Rational lo = eq.c_lo.at(q);
  const Rational hi = eq.c_hi.at(q);
  const Rational constant = eq.claim.constant.at(q);
  for (unsigned i = 0; i < samples; ++i) {
    const Rational c = lo + (hi - lo) * make_rational(Integer(i), Integer(samples - 1));
    QuadRational residual = eq.evaluate(c, q, z) / report.normalization - constant + slope * c;
    BoundSample s{c, residual, abs(residual) < QuadRational(report.bound)};
    if (abs(residual) > report.max_abs_residual) report.max_abs_residual = abs(residual);
    report.all_pass = report.all_pass && s.pass;
    report.samples.push_back(std::move(s));
  }
  report.observed_ratio = report.max_abs_residual.to_double() / report.bound.get_d();
  return report;
}

// --- interval geometry -------------------------------------------------------

bool DisjointnessReport::all_positive() const {
  for (const auto& lo : lower_endpoints) {
    if (lo.sign() <= 0) return false;
  }
  return !lower_endpoints.empty();
}

bool DisjointnessReport::disjoint() const {
  return gap_first_second.sign() > 0 && gap_second_third.sign() > 0 && gap_imaginary.sign() > 0;
}

DisjointnessReport disjointness_report(const SeedPair& seed) {
  const auto iv = forward_intervals(seed);
  DisjointnessReport r;
  for (const auto& i : iv) r.lower_endpoints.push_back(i.lo);
  r.gap_first_second = iv[1].lo - iv[0].hi;
  r.gap_second_third = iv[2].lo - iv[1].hi;
  r.gap_imaginary = iv[3].lo - iv[4].hi;
  return r;
}

bool check_disjointness(const SeedPair& seed) {
  const DisjointnessReport r = disjointness_report(seed);
  return r.all_positive() && r.disjoint();
}

std::vector<Integer> integer_points(const Rational& lo, const Rational& hi) {
  std::vector<Integer> out;
  for (Integer n = floor(lo) + 1; n < hi; ++n) out.push_back(n);
  return out;
}

std::vector<Integer> integer_points(const AsymptoticInterval& interval) {
  if (interval.label.axis() != Axis::real || !interval.lo.is_rational() || !interval.hi.is_rational()) {
    throw std::invalid_argument("integer_points needs a real interval");
  }
  return integer_points(interval.lo.rat(), interval.hi.rat());
}

IntegerPointHypotheses integer_point_hypotheses(const SeedPair& seed) {
  const Integer& p = seed.p();
  const Integer& q = seed.q();
  const Integer q3 = q * q * q;
  IntegerPointHypotheses h;
  h.outer_real_integer_free = p > 9 * q3;
  h.first_at_most_one = p * p > 10 * q3 * q;
  h.first_integer_free = 16 * p >= 256 * q3 + 5 * q;
  return h;
}

LemmaConstants lemma_constants(const SeedPair& seed) {
  require_large_p(seed);
  const Rational p = rat(seed.p());
  const Rational q = rat(seed.q());
  const Rational q2 = q * q;
  LemmaConstants out;
  out.third_left = (p + q) * (p + q) - 3 * q2;
  out.second_third_gap = 4 * q * p;
  const Rational shifted = p - q / 2;
  out.first_margin = shifted * shifted - q2 / 4 - 16 * q2 * q / p - 5 * q2 * q2 / (p * p);
  return out;
}

std::string to_string(Axis axis) { return axis == Axis::real ? "real" : "imaginary"; }
std::string to_string(Target target) { return target == Target::forward ? "forward" : "reverse"; }

}  // namespace cuboid
