// Thin pybind11 layer. Rationals cross the boundary as "num/den" strings and
// structured results as JSON text; the Python package converts both.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plp/experiments.hpp"
#include "plp/serialize.hpp"

namespace py = pybind11;
using namespace plp;

namespace {

Tower make_tower(long p, const std::optional<std::string>& u) {
  return u ? Tower(p, parse_rational(*u)) : Tower(p);
}

std::vector<std::string> coefficients(const Poly& f) {
  std::vector<std::string> out;
  for (const auto& c : f.coefficients()) out.push_back(to_string(c));
  return out;
}

QMatrix matrix_from_strings(const std::vector<std::vector<std::string>>& rows) {
  Json j = Json::array();
  for (const auto& row : rows) j.push_back(row);
  return qmatrix_from_json(j);
}

RecursionConfig recursion_config(const std::string& module_json, long p, const std::optional<std::string>& u,
                                 const std::optional<std::string>& J, long N, long n_max, const std::string& mode) {
  RecursionConfig c{make_tower(p, u), module_from_json(Json::parse(module_json)), std::nullopt, N, n_max, ZMode::standard};
  if (J) c.J = parse_interval(*J);
  if (mode == "negative") c.mode = ZMode::negative_n;
  else if (mode != "standard") throw std::invalid_argument("mode must be standard or negative");
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact p-adic period polynomials and Z recursions";

  m.def(
      "xitilde",
      [](long p, unsigned n, const std::string& J, const std::string& Jp, const std::optional<std::string>& u) {
        return coefficients(build_xitilde(make_tower(p, u), n, IntervalPair(parse_interval(J), parse_interval(Jp))).poly);
      },
      py::arg("p"), py::arg("n"), py::arg("J"), py::arg("Jp"), py::arg("u") = std::nullopt);

  m.def(
      "norm_bounds",
      [](long p, unsigned n, const std::string& J, const std::string& Jp, const std::optional<std::string>& u) {
        NormBoundReport r =
            check_norm_bounds(build_xitilde(make_tower(p, u), n, IntervalPair(parse_interval(J), parse_interval(Jp))));
        py::dict d;
        d["attained"] = r.attained.to_string();
        d["lower"] = to_string(r.lower);
        d["upper"] = to_string(r.upper);
        d["ok"] = r.ok;
        return d;
      },
      py::arg("p"), py::arg("n"), py::arg("J"), py::arg("Jp"), py::arg("u") = std::nullopt);

  m.def(
      "unit_quotient",
      [](long p, unsigned n, const std::string& J, const std::optional<std::string>& u) {
        Interval iv = parse_interval(J);
        UnitQuotient q = unit_quotient(build_xitilde(make_tower(p, u), n, IntervalPair(iv, iv)));
        py::dict d;
        d["quotient"] = coefficients(q.quotient);
        d["degree"] = q.report.degree;
        d["mu"] = q.report.mu.to_string();
        d["lambda"] = q.report.lambda;
        d["proven_bounds_ok"] = q.proven_bounds_ok;
        return d;
      },
      py::arg("p"), py::arg("n"), py::arg("J"), py::arg("u") = std::nullopt);

  m.def(
      "polygons",
      [](long p, const std::vector<std::vector<std::string>>& phi, const std::vector<long>& weights) {
        QMatrix a = matrix_from_strings(phi);
        auto slopes = [](const Polygon& g) {
          std::vector<std::string> out;
          for (const auto& s : g.slopes()) out.push_back(to_string(s));
          return out;
        };
        py::dict d;
        d["newton"] = slopes(newton_polygon(a, Prime(p)));
        d["smith"] = slopes(smith_polygon(a, Prime(p)));
        d["hodge"] = slopes(hodge_polygon(weights));
        d["katz_mazur"] = katz_mazur(a, Prime(p)).ok();
        return d;
      },
      py::arg("p"), py::arg("phi"), py::arg("weights"));

  m.def(
      "dim2_module",
      [](long p, long r, const std::string& a_p, const std::string& iota) {
        return to_json(dim2_module(Prime(p), r, parse_rational(a_p), parse_rational(iota))).dump();
      },
      py::arg("p"), py::arg("r"), py::arg("a_p") = "0", py::arg("iota") = "1");

  m.def(
      "z_recursion_report",
      [](const std::string& module_json, long p, const std::optional<std::string>& u, const std::optional<std::string>& J,
         long N, long n_max, const std::string& mode) {
        return to_json(z_recursion_report(recursion_config(module_json, p, u, J, N, n_max, mode))).dump();
      },
      py::arg("module"), py::arg("p"), py::arg("u") = std::nullopt, py::arg("J") = std::nullopt, py::arg("N") = 0,
      py::arg("n_max") = 4, py::arg("mode") = "standard");

  m.def(
      "pollack_report",
      [](const std::string& module_json, long p, long N, long n_max) {
        return to_json(pollack_report(recursion_config(module_json, p, std::nullopt, std::nullopt, N, n_max, "standard"))).dump();
      },
      py::arg("module"), py::arg("p"), py::arg("N") = 0, py::arg("n_max") = 4);
}
