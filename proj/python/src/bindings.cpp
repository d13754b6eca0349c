#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "cuboid/errors.hpp"
#include "cuboid/report.hpp"
#include "cuboid/sturm.hpp"

namespace py = pybind11;

// Python int <-> Integer and fractions.Fraction <-> Rational, via decimal
// strings so arbitrary sizes survive.
namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = cuboid::parse_integer(str(src).cast<std::string>());
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyLong_Check(src.ptr())) {
      value = mpq_class(cuboid::parse_integer(str(src).cast<std::string>()));
      return true;
    }
    if (!hasattr(src, "numerator") || !hasattr(src, "denominator")) return false;
    const auto num = cuboid::parse_integer(str(src.attr("numerator")).cast<std::string>());
    const auto den = cuboid::parse_integer(str(src.attr("denominator")).cast<std::string>());
    value = cuboid::make_rational(num, den);
    return true;
  }

  static handle cast(const mpq_class& v, return_value_policy, handle) {
    object fraction = module_::import("fractions").attr("Fraction");
    object num = reinterpret_steal<object>(PyLong_FromString(v.get_num().get_str().c_str(), nullptr, 10));
    object den = reinterpret_steal<object>(PyLong_FromString(v.get_den().get_str().c_str(), nullptr, 10));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

using cuboid::Integer;
using cuboid::Rational;
using cuboid::SeedPair;

py::object to_py(const cuboid::report::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

cuboid::Branch branch_from(const std::string& name) {
  if (name == "first") return cuboid::Branch::first;
  if (name == "second") return cuboid::Branch::second;
  throw std::invalid_argument("branch must be 'first' or 'second'");
}

py::list intervals_of(const std::vector<cuboid::AsymptoticInterval>& ivs) {
  py::list out;
  for (const auto& iv : ivs) out.append(to_py(cuboid::report::interval_json(iv)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic on the tenth-degree cuboid polynomials Q_pq";

  auto base = py::register_exception<cuboid::Error>(m, "CuboidError", PyExc_ValueError);
  py::register_exception<cuboid::InvalidSeed>(m, "InvalidSeed", base);
  py::register_exception<cuboid::HypothesisNotMet>(m, "HypothesisNotMet", base);
  py::register_exception<cuboid::ContainmentFailure>(m, "ContainmentFailure", base);
  py::register_exception<cuboid::NotSquarefree>(m, "NotSquarefree", base);
  py::register_exception<cuboid::CheckpointMismatch>(m, "CheckpointMismatch", base);
  py::register_exception<cuboid::NotARoot>(m, "NotARoot", base);

  m.def("integer_sqrt_floor", &cuboid::integer_sqrt_floor, py::arg("n"));

  m.def(
      "build_characteristic",
      [](const Integer& a, const Integer& b, const Integer& u) {
        return cuboid::build_characteristic({a, b, u}).coeffs();
      },
      py::arg("a"), py::arg("b"), py::arg("u"), "Coefficients of the degree-12 polynomial, constant term first.");
  m.def(
      "build_qpq", [](const Integer& p, const Integer& q) { return cuboid::build_Qpq(SeedPair(p, q)).poly.coeffs(); },
      py::arg("p"), py::arg("q"), "Coefficients of Q_pq, constant term first.");
  m.def(
      "half_polynomial",
      [](const Integer& p, const Integer& q) { return cuboid::build_Qpq(SeedPair(p, q)).half.coeffs(); },
      py::arg("p"), py::arg("q"));
  m.def(
      "verify_factorization",
      [](const Integer& p, const Integer& q, const std::string& branch) {
        return cuboid::verify_factorization(SeedPair(p, q), branch_from(branch));
      },
      py::arg("p"), py::arg("q"), py::arg("branch") = "first");
  m.def(
      "verify_reversion", [](const Integer& p, const Integer& q) { return cuboid::verify_reversion(SeedPair(p, q)); },
      py::arg("p"), py::arg("q"));

  m.def(
      "isolate_roots",
      [](const std::vector<Integer>& coeffs, const Rational& lo, const Rational& hi, const Rational& width) {
        std::vector<std::pair<Rational, Rational>> out;
        for (const auto& iv : cuboid::isolate_roots(cuboid::IntPolynomial(coeffs), {lo, hi}, width)) {
          out.emplace_back(iv.lo, iv.hi);
        }
        return out;
      },
      py::arg("coeffs"), py::arg("lo"), py::arg("hi"), py::arg("width"),
      "Isolating intervals (lo, hi] of the real roots in (lo, hi].");

  m.def(
      "forward_intervals", [](const Integer& p, const Integer& q) { return intervals_of(cuboid::forward_intervals(SeedPair(p, q))); },
      py::arg("p"), py::arg("q"));
  m.def(
      "reverse_intervals", [](const Integer& p, const Integer& q) { return intervals_of(cuboid::reverse_intervals(SeedPair(p, q))); },
      py::arg("p"), py::arg("q"));
  m.def(
      "check_disjointness", [](const Integer& p, const Integer& q) { return cuboid::check_disjointness(SeedPair(p, q)); },
      py::arg("p"), py::arg("q"));

  m.def(
      "certify_roots",
      [](const Integer& p, const Integer& q, const Rational& width, bool require_containment) {
        py::list out;
        for (const auto& r : cuboid::certify_roots(SeedPair(p, q), width, {require_containment})) {
          py::dict d;
          d["label"] = r.label.name();
          d["axis"] = cuboid::to_string(r.label.axis());
          d["lo"] = py::cast(r.interval.lo);
          d["hi"] = py::cast(r.interval.hi);
          d["contained"] = r.contained;
          out.append(d);
        }
        return out;
      },
      py::arg("p"), py::arg("q"), py::arg("width"), py::arg("require_containment") = false);
  m.def(
      "verify_correspondence",
      [](const Integer& p, const Integer& q, const Rational& width) {
        return cuboid::verify_correspondence(SeedPair(p, q), width);
      },
      py::arg("p"), py::arg("q"), py::arg("width"));
  m.def(
      "sign_checks",
      [](const Integer& p, const Integer& q, unsigned samples) {
        return to_py(cuboid::report::sign_checks(SeedPair(p, q), samples).body);
      },
      py::arg("p"), py::arg("q"), py::arg("samples") = 64);

  m.def(
      "classify_region",
      [](const Integer& p, const Integer& q) { return cuboid::to_string(cuboid::classify_region(SeedPair(p, q))); },
      py::arg("p"), py::arg("q"));
  m.def(
      "admissible", [](const Integer& p, const Integer& q, const Integer& t) { return cuboid::admissible(SeedPair(p, q), t); },
      py::arg("p"), py::arg("q"), py::arg("t"));
  m.def(
      "upper_bound_holds",
      [](const Integer& p, const Integer& q, const Integer& t) { return cuboid::upper_bound_holds(SeedPair(p, q), t); },
      py::arg("p"), py::arg("q"), py::arg("t"));
  m.def(
      "upper_bound_floor", [](const Integer& p, const Integer& q) { return cuboid::upper_bound_floor(SeedPair(p, q)); },
      py::arg("p"), py::arg("q"));

  m.def(
      "search_seed",
      [](const Integer& p, const Integer& q, const Rational& width) {
        return py::module_::import("json").attr("loads")(cuboid::to_report_line(cuboid::search_seed(SeedPair(p, q), width)));
      },
      py::arg("p"), py::arg("q"), py::arg("width") = Rational(1, 1048576));
  m.def(
      "run_search",
      [](const Integer& q_max, const Integer& p_max, const std::string& report, const Rational& width,
         unsigned workers, std::optional<std::string> resume, std::optional<unsigned> stop_after_rows) {
        cuboid::SearchConfig config{q_max, p_max, width, workers, std::move(resume), report};
        cuboid::SearchSummary summary;
        {
          py::gil_scoped_release release;
          summary = cuboid::run_search(config, cuboid::SearchControl{stop_after_rows});
        }
        return to_py(cuboid::report::search_summary(summary, config));
      },
      py::arg("q_max"), py::arg("p_max"), py::arg("report"), py::arg("width") = Rational(1, 1048576),
      py::arg("workers") = 1, py::arg("resume") = py::none(), py::arg("stop_after_rows") = py::none());
  m.def(
      "run_identities",
      [](const Integer& p_max, const Integer& q_max) {
        return to_py(cuboid::report::identities(cuboid::run_identities(p_max, q_max), p_max, q_max));
      },
      py::arg("p_max"), py::arg("q_max"));
}
