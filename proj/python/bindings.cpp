#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include <mcj/cli.hpp>
#include <mcj/coeffs.hpp>
#include <mcj/jack.hpp>
#include <mcj/mcj.hpp>
#include <mcj/orthog.hpp>
#include <mcj/report.hpp>

namespace py = pybind11;

namespace {

mcj::ParamSet params(int r, const std::string& d, double alpha, double nu) {
  return mcj::ParamSet(r, mcj::parse_rational(d), alpha, nu);
}

std::vector<std::vector<int>> as_lists(const std::vector<mcj::Partition>& parts, int r) {
  std::vector<std::vector<int>> out;
  for (const auto& m : parts) {
    std::vector<int> v;
    for (int j = 0; j < r; j++) v.push_back(m[j]);
    out.push_back(v);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multivariate circular Jacobi polynomials";

  py::register_exception<mcj::parameter_error>(m, "ParameterError", PyExc_ValueError);

  m.def("partitions", [](int max_weight, int r) { return as_lists(mcj::enumerate_partitions(max_weight, r), r); },
        py::arg("max_weight"), py::arg("r"));

  m.def(
      "render",
      [](const std::vector<int>& part, int r, const std::string& d, double alpha, double nu, const std::string& kind) {
        mcj::Partition p(part);
        if (kind == "spherical") return mcj::render(mcj::spherical(p, r, mcj::parse_rational(d)));
        if (kind == "jack") return mcj::render(mcj::jack_mono(p, r, mcj::parse_rational(d)));
        auto ps = params(r, d, alpha, nu);
        ps.require_alpha_range();
        return mcj::render(mcj::mcj_build(p, ps).body);
      },
      py::arg("m"), py::arg("r"), py::arg("d") = "2", py::arg("alpha") = 2.0, py::arg("nu") = 0.0,
      py::arg("kind") = "mcj");

  m.def(
      "phi",
      [](const std::vector<int>& part, const std::vector<std::complex<double>>& sigma, const std::string& d,
         double alpha, double nu) {
        auto ps = params(static_cast<int>(sigma.size()), d, alpha, nu);
        ps.require_alpha_range();
        return mcj::mcj_build(mcj::Partition(part), ps)(sigma);
      },
      py::arg("m"), py::arg("sigma"), py::arg("d") = "2", py::arg("alpha") = 2.0, py::arg("nu") = 0.0);

  m.def(
      "expected_norm",
      [](const std::vector<int>& part, int r, const std::string& d, double alpha, double nu) {
        return mcj::expected_norm(mcj::Partition(part), params(r, d, alpha, nu));
      },
      py::arg("m"), py::arg("r"), py::arg("d") = "2", py::arg("alpha") = 2.0, py::arg("nu") = 0.0);

  m.def(
      "verify_orthogonality_json",
      [](int r, const std::string& d, double alpha, double nu, int max_weight, int points, double tol) {
        auto ps = params(r, d, alpha, nu);
        auto rule = mcj::build_rule(points > 0 ? points : mcj::default_points(r), mcj::RuleKind::gauss_gegenbauer, ps);
        py::gil_scoped_release release;
        auto rep = mcj::verify_orthogonality(ps, max_weight, rule, tol, tol);
        return mcj::dump_json(mcj::orth_report_json(rep));
      },
      py::arg("r"), py::arg("d") = "2", py::arg("alpha") = 2.0, py::arg("nu") = 0.0, py::arg("max_weight") = 2,
      py::arg("points") = 0, py::arg("tol") = 1e-9);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = mcj::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line front end; returns (exit_code, stdout, stderr).");
}
