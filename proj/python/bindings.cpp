// Python bindings: a thin wrapper returning plain dicts/lists (via the JSON
// serializers) so results match the CLI output shapes exactly.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "minregion/errors.hpp"
#include "minregion/federated.hpp"
#include "minregion/io.hpp"
#include "minregion/quadratic.hpp"
#include "minregion/region.hpp"
#include "minregion/verify.hpp"

namespace py = pybind11;
using namespace minregion;

namespace {

py::object jpy(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

QuadraticFunction quad_from(const py::object& o) {
  const auto rows = o["q"].cast<std::vector<std::vector<double>>>();
  const std::size_t n = rows.size();
  Mat q(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw InvalidInput("quadratic dict: 'q' must be a square matrix");
    for (std::size_t j = 0; j < n; ++j) q(i, j) = rows[i][j];
  }
  return QuadraticFunction(std::move(q), o["b"].cast<Vec>(),
                           o["c"].cast<double>());
}

}  // namespace

PYBIND11_MODULE(minregion, m) {
  m.doc() =
      "Region of attainable minimizers of a sum of two strongly convex "
      "functions with prescribed minimizers, curvature floors and a shared "
      "gradient bound.";

  py::class_<ProblemInstance>(m, "Instance")
      .def(py::init<Vec, Vec, double, double, double>(), py::arg("x1_star"),
           py::arg("x2_star"), py::arg("sigma1"), py::arg("sigma2"),
           py::arg("L"))
      .def_property_readonly("dim", &ProblemInstance::dim)
      .def_readonly("x1_star", &ProblemInstance::x1_star)
      .def_readonly("x2_star", &ProblemInstance::x2_star)
      .def_readonly("sigma1", &ProblemInstance::sigma1)
      .def_readonly("sigma2", &ProblemInstance::sigma2)
      .def_readonly("L", &ProblemInstance::L)
      .def("regime",
           [](const ProblemInstance& i) { return jpy(to_json(regime(i))); })
      .def(
          "classify",
          [](const ProblemInstance& i, const Vec& p, double tol) {
            return jpy(to_json(classify(i, p, tol), angle_report(i, p)));
          },
          py::arg("point"), py::arg("tol") = kDefaultClassifyTol)
      .def(
          "trace",
          [](const ProblemInstance& i, int samples) {
            return jpy(to_json(trace_boundary(i, samples)));
          },
          py::arg("samples") = 512)
      .def(
          "witness",
          [](const ProblemInstance& i, const Vec& p, int k) {
            if (k == 1) return jpy(to_json(witness_pair(i, p)));
            json arr = json::array();
            for (const WitnessPair& w : witness_family(i, p, k))
              arr.push_back(to_json(w));
            return jpy(json{{"count", k}, {"witnesses", std::move(arr)}});
          },
          py::arg("point"), py::arg("k") = 1)
      .def("fed_point",
           [](const ProblemInstance& i) { return jpy(to_json(fed_point(i))); })
      .def(
          "verify",
          [](const ProblemInstance& i, const std::string& mode,
             std::uint64_t trials, std::uint64_t seed, double spread,
             double tol) {
            if (mode == "sound")
              return jpy(to_json(mc_soundness(i, trials, spread, seed, tol)));
            if (mode == "complete")
              return jpy(to_json(mc_completeness(i, trials, seed)));
            throw InvalidInput("verify: mode must be 'sound' or 'complete'");
          },
          py::arg("mode"), py::arg("trials") = 1000,
          py::arg("seed") = 12345, py::arg("spread") = 1.0,
          py::arg("tol") = kDefaultClassifyTol);

  m.def(
      "construct_quadratic",
      [](const Vec& x_star, const Vec& x0, const Vec& g, double sigma) {
        return jpy(to_json(construct_quadratic(x_star, x0, g, sigma)));
      },
      py::arg("x_star"), py::arg("x0"), py::arg("g"), py::arg("sigma"),
      "Quadratic with the given minimizer, curvature floor sigma and exact "
      "gradient g at x0, as a {'q','b','c'} dict.");
  m.def(
      "sum_minimizer",
      [](const py::object& f1, const py::object& f2) {
        return sum_minimizer(quad_from(f1), quad_from(f2));
      },
      py::arg("f1"), py::arg("f2"),
      "Exact minimizer of the sum of two {'q','b','c'} quadratics.");
  m.def("min_gradient_bound", &min_gradient_bound, py::arg("instance"),
        "Smallest gradient bound L for which the region is nonempty.");
}
