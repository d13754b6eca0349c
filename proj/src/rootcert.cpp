#include "cuboid/rootcert.hpp"

#include <algorithm>
#include <stdexcept>

#include "cuboid/errors.hpp"

namespace cuboid {

namespace {

// A root of the half-polynomial together with a bracket for its square root
// on the t (or Im t) axis.
class RootBracket {
 public:
  RootBracket(const IntPolynomial& half, IsolatingInterval y)
      : half_(&half), y_(std::move(y)), negative_(y_.hi <= 0) {
    update();
  }

  const IsolatingInterval& axis_interval() const { return axis_; }
  const IsolatingInterval& y_interval() const { return y_; }
  bool negative() const { return negative_; }

  void refine() {
    y_ = refine_root(*half_, y_, y_.width() / 2);
    denominator_ *= 2;
    update();
  }

  // y-image of the axis interval, as an interval in y.
  IsolatingInterval y_image() const {
    if (!negative_) return {axis_.lo * axis_.lo, axis_.hi * axis_.hi};
    return {-(axis_.hi * axis_.hi), -(axis_.lo * axis_.lo)};
  }

 private:
  // sqrt of r bracketed on the grid 1/denominator_.
  Rational sqrt_below(const Rational& r) const {
    const Integer d2 = denominator_ * denominator_;
    return make_rational(integer_sqrt_floor(floor(r * Rational(d2))), denominator_);
  }
  Rational sqrt_above(const Rational& r) const {
    const Integer d2 = denominator_ * denominator_;
    return make_rational(integer_sqrt_floor(ceil(r * Rational(d2))) + 1, denominator_);
  }

  void update() {
    if (!negative_) {
      axis_ = {sqrt_below(max_zero(y_.lo)), sqrt_above(y_.hi)};
    } else {
      // s = sqrt(-y) reverses the order of the endpoints.
      axis_ = {sqrt_below(-y_.hi), sqrt_above(max_zero(-y_.lo))};
    }
  }

  static Rational max_zero(const Rational& r) { return r < 0 ? Rational(0) : r; }

  const IntPolynomial* half_;
  IsolatingInterval y_;
  bool negative_;
  Integer denominator_{1024};
  IsolatingInterval axis_{Rational(0), Rational(1)};
};

enum class Placement { inside, outside, undecided };

Placement place(const IsolatingInterval& root, const AsymptoticInterval& predicted) {
  const QuadRational lo(root.lo);
  const QuadRational hi(root.hi);
  if (predicted.lo <= lo && hi < predicted.hi) return Placement::inside;
  if (hi <= predicted.lo || lo >= predicted.hi) return Placement::outside;
  return Placement::undecided;
}

constexpr int kMaxContainmentRefinements = 256;

}  // namespace

std::vector<IsolatedRoot> certify_roots(const SeedPair& seed, const Rational& width,
                                        CertifyOptions options) {
  if (!(width > 0)) throw std::invalid_argument("certify_roots requires width > 0");
  std::vector<AsymptoticInterval> predicted;
  Target target;
  if (seed.large_p()) {
    predicted = forward_intervals(seed);
    target = Target::forward;
  } else if (seed.swapped().large_p()) {
    predicted = reverse_intervals(seed.swapped());
    target = Target::reverse;
  } else {
    throw HypothesisNotMet("root certification needs p >= 59 q or q >= 59 p");
  }

  const CuboidPolynomial cp = build_Qpq(seed);
  const IntPolynomial& half = cp.half;
  if (!is_squarefree(cp.poly)) throw NotSquarefree("Q_pq has a repeated root");

  const Rational bound(cauchy_bound(half));
  const Rational coarse(1);
  auto positive = isolate_roots(half, {Rational(0), bound}, coarse);
  auto negative = isolate_roots(half, {-bound, Rational(0)}, coarse);
  if (positive.size() != 3 || negative.size() != 2) {
    throw ContainmentFailure("half-polynomial has " + std::to_string(positive.size()) +
                             " positive and " + std::to_string(negative.size()) +
                             " negative roots, expected 3 and 2");
  }

  std::vector<RootBracket> brackets;
  for (auto& iv : positive) brackets.emplace_back(half, iv);  // ascending t
  // Im t = sqrt(-y) is descending when y is ascending, so the most negative y
  // gives the largest imaginary part: t4 then t5.
  for (auto& iv : negative) brackets.emplace_back(half, iv);

  const SturmChain chain = sturm_sequence(half);
  std::vector<IsolatedRoot> roots;
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    RootBracket& b = brackets[i];
    while (b.axis_interval().width() > width || count_roots(chain, b.y_image().lo, b.y_image().hi) != 1) {
      b.refine();
    }
    const AsymptoticInterval& want = predicted[i];
    Placement where = place(b.axis_interval(), want);
    for (int k = 0; k < kMaxContainmentRefinements && where == Placement::undecided; ++k) {
      b.refine();
      where = place(b.axis_interval(), want);
    }
    IsolatedRoot r{RootLabel{static_cast<int>(i) + 1}, b.axis_interval(), b.y_interval(), seed, target,
                   where == Placement::inside};
    roots.push_back(std::move(r));
  }

  if (options.require_containment) {
    for (const auto& r : roots) {
      if (!r.contained) {
        throw ContainmentFailure(r.label.name() + " isolated in (" + to_string(r.interval.lo) + ", " +
                                 to_string(r.interval.hi) + "] lies outside its predicted interval (" +
                                 to_string(predicted[static_cast<std::size_t>(r.label.index - 1)].lo) +
                                 ", " + to_string(predicted[static_cast<std::size_t>(r.label.index - 1)].hi) +
                                 ")");
      }
    }
  }
  return roots;
}

std::vector<IsolatedRoot> opposite_roots(const std::vector<IsolatedRoot>& roots) {
  if (roots.size() != 5) throw std::invalid_argument("opposite_roots expects the five certified roots");
  std::vector<IsolatedRoot> out = roots;
  for (const auto& r : roots) {
    IsolatedRoot m = r;
    m.label = r.label.mirrored();
    m.interval = {-r.interval.hi, -r.interval.lo};
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<CorrespondencePair> correspondence_report(const SeedPair& seed, const Rational& width) {
  if (!seed.large_p()) throw HypothesisNotMet("correspondence check needs p >= 59 q");
  const CertifyOptions lenient{false};
  const auto fwd = certify_roots(seed, width, lenient);
  const auto rev = certify_roots(seed.swapped(), width, lenient);
  const Integer pq = seed.p() * seed.q();
  const Rational target(pq * pq);
  // (forward label, reverse label)
  constexpr int pairing[5][2] = {{1, 3}, {2, 2}, {3, 1}, {4, 5}, {5, 4}};
  std::vector<CorrespondencePair> out;
  for (const auto& pr : pairing) {
    const IsolatingInterval& a = fwd[static_cast<std::size_t>(pr[0] - 1)].interval;
    const IsolatingInterval& b = rev[static_cast<std::size_t>(pr[1] - 1)].interval;
    CorrespondencePair c{RootLabel{pr[0]}, RootLabel{pr[1]}, a.lo * b.lo, a.hi * b.hi, false};
    c.contains = c.product_lo < target && target <= c.product_hi;
    out.push_back(std::move(c));
  }
  return out;
}

bool verify_correspondence(const SeedPair& seed, const Rational& width) {
  const auto pairs = correspondence_report(seed, width);
  return std::all_of(pairs.begin(), pairs.end(), [](const CorrespondencePair& c) { return c.contains; });
}

}  // namespace cuboid
