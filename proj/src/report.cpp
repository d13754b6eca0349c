#include "cuboid/report.hpp"

#include "cuboid/errors.hpp"

namespace cuboid::report {

std::string exact(const QuadRational& x) { return to_string(x); }

Json seed_json(const SeedPair& seed) {
  return Json{{"p", seed.p().get_str()}, {"q", seed.q().get_str()}};
}

Json interval_json(const AsymptoticInterval& iv) {
  Json j;
  j["label"] = iv.label.name();
  j["axis"] = to_string(iv.label.axis());
  j["target"] = to_string(iv.target);
  j["lo"] = exact(iv.lo);
  j["hi"] = exact(iv.hi);
  j["lo_approx"] = iv.lo.to_double();
  j["hi_approx"] = iv.hi.to_double();
  return j;
}

Json root_json(const IsolatedRoot& r) {
  Json j;
  j["label"] = r.label.name();
  j["axis"] = to_string(r.label.axis());
  j["target"] = to_string(r.target);
  j["lo"] = to_string(r.interval.lo);
  j["hi"] = to_string(r.interval.hi);
  j["y_lo"] = to_string(r.y_interval.lo);
  j["y_hi"] = to_string(r.y_interval.hi);
  j["approx"] = to_double((r.interval.lo + r.interval.hi) / 2);
  j["contained"] = r.contained;
  return j;
}

Json identities(const IdentitySummary& s, const Integer& p_max, const Integer& q_max) {
  auto pairs = [](const std::vector<std::pair<Integer, Integer>>& v) {
    Json a = Json::array();
    for (const auto& [p, q] : v) a.push_back(Json{{"p", p.get_str()}, {"q", q.get_str()}});
    return a;
  };
  Json j;
  j["p_max"] = p_max.get_str();
  j["q_max"] = q_max.get_str();
  j["pairs_checked"] = s.pairs_checked;
  j["factorization_failures"] = pairs(s.factorization_failures);
  j["reversion_failures"] = pairs(s.reversion_failures);
  j["ok"] = s.ok();
  return j;
}

Json intervals(const SeedPair& seed) {
  Json j;
  j["seed"] = seed_json(seed);
  Json fwd = Json::array();
  for (const auto& iv : forward_intervals(seed)) fwd.push_back(interval_json(iv));
  j["forward"] = fwd;
  Json rev = Json::array();
  for (const auto& iv : reverse_intervals(seed)) rev.push_back(interval_json(iv));
  j["reverse"] = rev;
  const DisjointnessReport d = disjointness_report(seed);
  j["disjoint"] = d.disjoint();
  j["gap_second_third"] = exact(d.gap_second_third);
  Json pts = Json::object();
  for (const auto& iv : forward_intervals(seed)) {
    if (iv.label.axis() != Axis::real) continue;
    Json a = Json::array();
    for (const auto& t : integer_points(iv)) a.push_back(t.get_str());
    pts[iv.label.name()] = a;
  }
  j["integer_points"] = pts;
  return j;
}

Json regions(const SeedPair& seed) {
  Json j;
  j["seed"] = seed_json(seed);
  j["region"] = to_string(classify_region(seed));
  j["large_p"] = seed.large_p();
  const IntegerPointHypotheses h = integer_point_hypotheses(seed);
  j["outer_real_integer_free"] = h.outer_real_integer_free;
  j["first_at_most_one"] = h.first_at_most_one;
  j["first_integer_free"] = h.first_integer_free;
  return j;
}

Verdict certify(const SeedPair& seed, const Rational& width) {
  Verdict v;
  const auto roots = certify_roots(seed, width, CertifyOptions{false});
  Json j;
  j["seed"] = seed_json(seed);
  j["width"] = to_string(width);
  Json arr = Json::array();
  bool all_contained = true;
  for (const auto& r : roots) {
    arr.push_back(root_json(r));
    all_contained = all_contained && r.contained;
  }
  j["roots"] = arr;
  j["all_contained"] = all_contained;
  Json corr = Json::array();
  bool corr_ok = true;
  for (const auto& c : correspondence_report(seed, width)) {
    corr.push_back(Json{{"forward", c.forward.name()},
                        {"reverse", c.reverse.name()},
                        {"product_lo", to_string(c.product_lo)},
                        {"product_hi", to_string(c.product_hi)},
                        {"contains", c.contains}});
    corr_ok = corr_ok && c.contains;
  }
  j["correspondence"] = corr;
  j["correspondence_ok"] = corr_ok;
  v.ok = all_contained && corr_ok;
  j["ok"] = v.ok;
  v.body = std::move(j);
  return v;
}

Verdict sign_checks(const SeedPair& seed, unsigned samples) {
  Verdict v;
  v.ok = true;
  Json j;
  j["seed"] = seed_json(seed);
  Json labels = Json::array();
  for (int k = 1; k <= 5; ++k) {
    const ShiftedEquation eq = derive_shifted_equation(RootLabel{k});
    Json e;
    e["label"] = eq.label.name();
    e["z_power"] = eq.z_power;
    e["c_lo"] = to_string(eq.c_lo.at(seed.q()));
    e["c_hi"] = to_string(eq.c_hi.at(seed.q()));
    bool pass = false;
    try {
      pass = sign_change_check(eq, seed);
      e["sign_change"] = pass ? "PASS" : "FAIL";
    } catch (const ZeroAtEndpoint&) {
      e["sign_change"] = "FAIL";
      e["note"] = "zero at a c-range endpoint";
    }
    v.ok = v.ok && pass;
    const BoundReport b = bound_check(eq, seed, samples);
    e["claimed_split"] = eq.claim.description;
    e["normalization"] = exact(b.normalization);
    e["claimed_bound"] = to_string(b.bound);
    e["max_abs_residual"] = exact(b.max_abs_residual);
    e["max_abs_residual_approx"] = b.max_abs_residual.to_double();
    e["observed_ratio"] = b.observed_ratio;
    e["bound_holds"] = b.all_pass;
    labels.push_back(e);
  }
  j["labels"] = labels;
  j["ok"] = v.ok;
  v.body = std::move(j);
  return v;
}

Json search_summary(const SearchSummary& s, const SearchConfig& config) {
  Json j;
  j["q_max"] = config.q_max.get_str();
  j["p_max"] = config.p_max.get_str();
  j["width"] = to_string(config.width);
  j["workers"] = config.workers;
  j["report"] = config.report_path;
  j["config_hash"] = config_hash(config);
  j["resumed"] = s.resumed;
  j["rows_written"] = s.rows_written;
  j["records_written"] = s.records_written;
  j["candidates_found"] = s.candidates_found;
  j["complete"] = s.complete;
  return j;
}

}  // namespace cuboid::report
