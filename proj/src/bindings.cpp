#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fplab/distance.hpp"
#include "fplab/expression.hpp"
#include "fplab/fpset.hpp"
#include "fplab/theorems.hpp"

namespace py = pybind11;
using namespace fplab;

namespace {

FpSet make_set(std::uint32_t p, const std::vector<std::uint32_t>& elems) {
    return FpSet::from_elements(PrimeField(p), elems);
}

PointSet2D make_points(std::uint32_t p,
                       const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pts) {
    PrimeField f(p);
    std::vector<Point2> v;
    v.reserve(pts.size());
    for (auto [x, y] : pts) v.push_back(Point2{f.reduce((std::int64_t)x), f.reduce((std::int64_t)y)});
    return PointSet2D::from_points(f, std::move(v));
}

py::dict bound_dict(const BoundReport& r) {
    py::dict d;
    d["lhs"] = r.lhs;
    py::dict rhs;
    for (const auto& [k, v] : r.rhs_terms) rhs[py::str(k)] = v;
    d["rhs"] = rhs;
    d["ratio"] = r.ratio;
    d["regime"] = r.regime;
    py::dict extras;
    for (const auto& [k, v] : r.extras) extras[py::str(k)] = v;
    d["extras"] = extras;
    return d;
}

}  // namespace

PYBIND11_MODULE(_fplab, m) {
    m.doc() = "exact finite-field distance-set and incidence laboratory";

    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    m.def("difference_set",
          [](std::uint32_t p, std::vector<std::uint32_t> a) {
              return difference_set(make_set(p, a)).elements();
          },
          py::arg("p"), py::arg("a"));
    m.def("square_set",
          [](std::uint32_t p, std::vector<std::uint32_t> a) {
              return square_set(make_set(p, a)).elements();
          },
          py::arg("p"), py::arg("a"));
    m.def("sumset",
          [](std::uint32_t p, std::vector<std::uint32_t> b, std::vector<std::uint32_t> c) {
              return sumset(make_set(p, b), make_set(p, c)).elements();
          },
          py::arg("p"), py::arg("b"), py::arg("c"));
    m.def("iterated_sumset",
          [](std::uint32_t p, std::vector<std::uint32_t> a, unsigned k) {
              return iterated_sumset(make_set(p, a), k).elements();
          },
          py::arg("p"), py::arg("a"), py::arg("k"));
    m.def("rep_function",
          [](std::uint32_t p, std::vector<std::uint32_t> b, std::vector<std::uint32_t> c) {
              return rep_function(make_set(p, b), make_set(p, c)).counts;
          },
          py::arg("p"), py::arg("b"), py::arg("c"));
    m.def("doubling",
          [](std::uint32_t p, std::vector<std::uint32_t> a) {
              auto s = doubling_stats(make_set(p, a));
              return py::make_tuple(s.size_a, s.size_d, s.k.str());
          },
          py::arg("p"), py::arg("a"));

    m.def("evaluate",
          [](std::uint32_t p, std::vector<std::uint32_t> a, const std::string& expr) {
              return evaluate_expression(make_set(p, a), SumExpression::parse(expr)).elements();
          },
          py::arg("p"), py::arg("a"), py::arg("expr"));
    m.def("coverage",
          [](std::uint32_t p, std::vector<std::uint32_t> a, const std::string& expr) {
              auto v = coverage(make_set(p, a), SumExpression::parse(expr));
              return py::make_tuple(v.covered, v.missing.elements());
          },
          py::arg("p"), py::arg("a"), py::arg("expr"));

    m.def("distance_set_product",
          [](std::uint32_t p, std::vector<std::uint32_t> a, unsigned d) {
              return distance_set_product(make_set(p, a), d).elements();
          },
          py::arg("p"), py::arg("a"), py::arg("d"));
    m.def("distance_energy",
          [](std::uint32_t p, std::vector<std::pair<std::uint32_t, std::uint32_t>> pts) {
              return distance_energy(make_points(p, pts));
          },
          py::arg("p"), py::arg("points"));
    m.def("bisector_energies",
          [](std::uint32_t p, std::vector<std::pair<std::uint32_t, std::uint32_t>> pts) {
              auto c = bisector_census(make_points(p, pts));
              return py::make_tuple(c.energy_nonisotropic, c.energy_isotropic);
          },
          py::arg("p"), py::arg("points"));
    m.def("isosceles",
          [](std::uint32_t p, std::vector<std::pair<std::uint32_t, std::uint32_t>> apexes,
             std::vector<std::pair<std::uint32_t, std::uint32_t>> bases) {
              auto c = isosceles_census(make_points(p, apexes), make_points(p, bases));
              return py::make_tuple(c.t1, c.t2_degenerate, c.t2_isotropic);
          },
          py::arg("p"), py::arg("apexes"), py::arg("bases"));

    m.def("thm1_sweep",
          [](std::uint32_t p, std::vector<std::uint32_t> a) { return thm1_sweep(make_set(p, a)); },
          py::arg("p"), py::arg("a"));
    m.def("thm14_sweep",
          [](std::uint32_t p, std::vector<std::uint32_t> a) { return thm14_sweep(make_set(p, a)); },
          py::arg("p"), py::arg("a"));
    m.def("thm15_sweep",
          [](std::uint32_t p, std::vector<std::uint32_t> a) { return thm15_sweep(make_set(p, a)); },
          py::arg("p"), py::arg("a"));
    m.def("count_quadratic_solutions",
          [](std::uint32_t p, std::vector<std::uint32_t> a) {
              return count_quadratic_solutions(make_set(p, a));
          },
          py::arg("p"), py::arg("a"));

    m.def("thm2_report",
          [](std::uint32_t p, std::vector<std::uint32_t> a) {
              return bound_dict(thm2_report(make_set(p, a)));
          },
          py::arg("p"), py::arg("a"));
    m.def("lemma_energy_report",
          [](std::uint32_t p, std::vector<std::uint32_t> a) {
              return bound_dict(lemma_energy_report(make_set(p, a)));
          },
          py::arg("p"), py::arg("a"));

    m.def("threshold_exponent",
          [](unsigned d) {
              auto t = threshold_exponent(d);
              return py::make_tuple(t.epsilon.str(), t.per_coordinate.str());
          },
          py::arg("d"));
}
