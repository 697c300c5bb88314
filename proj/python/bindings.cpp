#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "euclidpt/cli.hpp"
#include "euclidpt/dyson_e2.hpp"
#include "euclidpt/e2_element.hpp"
#include "euclidpt/e3.hpp"
#include "euclidpt/errors.hpp"
#include "euclidpt/mathieu.hpp"
#include "euclidpt/serialize.hpp"
#include "euclidpt/spectral_circle.hpp"
#include "euclidpt/sweep.hpp"

#include <sstream>

namespace py = pybind11;
using namespace euclidpt;

namespace {

E2Element from_list(const std::vector<cplx>& c) {
  if (c.size() != kE2BasisSize) throw std::invalid_argument("E2 elements have 10 coefficients");
  E2Element::Coeffs a;
  std::copy(c.begin(), c.end(), a.begin());
  return E2Element(a);
}

py::dict table_dict(const E3AdjointTable& t) {
  py::dict d;
  d["mu"] = t.mu;
  d["nu"] = t.nu;
  d["rho"] = t.rho;
  d["omega2"] = t.omega2;
  d["omega_tilde2"] = t.omega_tilde2;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "PT-symmetric Euclidean-algebra Hamiltonians";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<MapUndefined>(m, "MapUndefined", base.ptr());
  py::register_exception<DegenerateCouplings>(m, "DegenerateCouplings", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<ConvergenceFailure>(m, "ConvergenceFailure", base.ptr());
  py::register_exception<TrackingAmbiguity>(m, "TrackingAmbiguity", base.ptr());
  py::register_exception<DegreeOverflow>(m, "DegreeOverflow", base.ptr());

  py::class_<E2Element>(m, "E2Element")
      .def(py::init([](const std::vector<cplx>& c) { return from_list(c); }))
      .def_static("u", &E2Element::u)
      .def_static("v", &E2Element::v)
      .def_static("J", &E2Element::J)
      .def_static("scalar", [](cplx s) { return E2Element::scalar(s); })
      .def_static("casimir", &E2Element::casimir)
      .def_property_readonly("coeffs", [](const E2Element& a) {
        return std::vector<cplx>(a.coeffs().begin(), a.coeffs().end());
      })
      .def("degree", &E2Element::degree)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def("__mul__", [](const E2Element& a, const E2Element& b) { return multiply(a, b); })
      .def("__mul__", [](const E2Element& a, cplx s) { return a * s; })
      .def("__rmul__", [](const E2Element& a, cplx s) { return a * s; })
      .def("__eq__", [](const E2Element& a, const E2Element& b) { return a == b; })
      .def("dagger", [](const E2Element& a) { return hermitian_conjugate(a); })
      .def("to_json", [](const E2Element& a) { return to_json(a).dump(); })
      .def("__repr__", &E2Element::to_string);

  m.def("basis", [] {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < kE2BasisSize; ++i)
      names.emplace_back(monomial_name(static_cast<Monomial>(i)));
    return names;
  });
  m.def("commutator", [](const E2Element& a, const E2Element& b) { return commutator(a, b); });
  m.def("hermiticity_residual", [](const E2Element& a) { return hermiticity_residual(a); });
  m.def("apply_pt", [](const std::string& s, const E2Element& a) {
    return apply_pt(parse_pt_symmetry(s), a);
  });
  m.def("build_hamiltonian", [](const std::string& s, const Couplings& mu) {
    return build_hamiltonian(parse_pt_symmetry(s), mu);
  });
  m.def(
      "similarity_transform",
      [](double lambda, double rho, double tau, const E2Element& H) {
        return similarity_transform({lambda, rho, tau}, H);
      },
      py::arg("lam"), py::arg("rho"), py::arg("tau"), py::arg("H"));

  m.def("hermitize", [](const std::string& s, const NamedParams& free) {
    const HermitizationResult r = hermitize(parse_pt_symmetry(s), free);
    py::dict d;
    d["lambda"] = r.params.lambda;
    d["rho"] = r.params.rho;
    d["tau"] = r.params.tau;
    d["constrained_mu"] = r.constrained_mu;
    d["H"] = r.H;
    d["h"] = r.h;
    d["residual"] = r.residual;
    d["original_hermitian"] = r.original_hermitian;
    return d;
  });
  m.def("hermitize_parameter_names",
        [](const std::string& s) { return hermitize_parameter_names(parse_pt_symmetry(s)); });
  m.def("ep_predictions_pt5", [](double mu3, double mu4, double mu7, const std::string& axis) {
    const Pt5Axis a = axis == "mu3" ? Pt5Axis::Mu3 : axis == "mu4" ? Pt5Axis::Mu4 : Pt5Axis::Mu7;
    if (axis != "mu3" && axis != "mu4" && axis != "mu7") throw ConfigError("axis mu3, mu4 or mu7");
    return ep_predictions_pt5(mu3, mu4, mu7, a);
  });
  m.def("pt5_three_param_hamiltonian", &pt5_three_param_hamiltonian);

  m.def(
      "spectrum",
      [](const E2Element& a, double sector, int truncation, std::size_t count) {
        const Spectrum sp = eigen_spectrum({a, sector, truncation});
        const std::size_t n = count ? std::min(count, sp.trusted) : sp.trusted;
        return std::vector<cplx>(sp.eigenvalues.begin(), sp.eigenvalues.begin() + n);
      },
      py::arg("element"), py::arg("sector") = 0.0, py::arg("truncation") = 64,
      py::arg("count") = 0);
  m.def("pt1_closed_spectrum", [](double mu1, double mu3, int n, bool fermionic) {
    return pt1_closed_spectrum(mu1, mu3, n, fermionic ? Statistics::Fermionic : Statistics::Bosonic);
  });

  m.def(
      "exceptional_points",
      [](const std::string& family, const std::string& symmetry, const Couplings& mu,
         const std::string& sweep_spec, double tol, std::size_t levels) {
        HamiltonianTemplate t;
        t.family = parse_family(family);
        t.symmetry = parse_pt_symmetry(symmetry);
        t.mu = mu;
        SweepOptions opt;
        opt.levels = levels;
        const SweepResult r = sweep(t, parse_sweep_axis(sweep_spec), opt);
        py::list out;
        for (const auto& e : find_exceptional_points(r, tol))
          out.append(py::make_tuple(e.parameter_value, e.energy, e.level_pair));
        return out;
      },
      py::arg("family"), py::arg("symmetry"), py::arg("mu"), py::arg("sweep"),
      py::arg("tol") = 1e-6, py::arg("levels") = 7);

  m.def(
      "mathieu_characteristic_values",
      [](cplx q, const std::string& cls, int count, int trunc) {
        return characteristic_values(q, parse_mathieu_class(cls), count,
                                     trunc ? trunc : count + 40);
      },
      py::arg("q"), py::arg("cls") = "even-pi", py::arg("count") = 8, py::arg("trunc") = 0);
  m.def(
      "complex_mathieu_eps",
      [](double max_q, const std::string& cls) {
        py::list out;
        for (const auto& e : complex_mathieu_eps(max_q, parse_mathieu_class(cls)))
          out.append(py::make_tuple(e.t, e.a_merge));
        return out;
      },
      py::arg("max_q"), py::arg("cls") = "even-pi");

  m.def(
      "e3_adjoint",
      [](double lz, double lp, double lm, double kz, double kp, double km) {
        return table_dict(e3_adjoint({lz, lp, lm, kz, kp, km}));
      },
      py::arg("lambda_z") = 0.0, py::arg("lambda_plus") = 0.0, py::arg("lambda_minus") = 0.0,
      py::arg("kappa_z") = 0.0, py::arg("kappa_plus") = 0.0, py::arg("kappa_minus") = 0.0);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
