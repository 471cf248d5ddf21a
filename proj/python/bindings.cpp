// Python bindings: thin wrappers over the closed-form spectrum, wavefunction,
// expectation and eigensolver entry points, with scalar arguments instead of
// the C++ parameter structs.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptd/errors.hpp"
#include "ptd/expectation.hpp"
#include "ptd/model.hpp"
#include "ptd/oracle.hpp"
#include "ptd/spectrum.hpp"
#include "ptd/wavefunction.hpp"

namespace py = pybind11;

namespace {

ptd::PhysicalParams make_params(double alpha, double V0, double mu, double hbar) {
  ptd::PhysicalParams p;
  p.V0 = V0;
  p.alpha = alpha;
  p.mu = mu;
  p.hbar = hbar;
  p.validate();
  return p;
}

ptd::StateLabel make_state(int D, int ell, int n_r) {
  const ptd::StateLabel st{D, ell, n_r};
  st.validate();
  return st;
}

ptd::ExponentMode mode_of(const std::string& mode) {
  if (mode == "corrected") return ptd::ExponentMode::corrected;
  if (mode == "as-printed") return ptd::ExponentMode::as_printed;
  throw std::invalid_argument("mode must be 'corrected' or 'as-printed'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Closed-form bound states of the D-dimensional hyperbolic well "
            "V(r) = -V0 / cosh^2(alpha r)";

  py::register_exception<ptd::no_bound_state_error>(m, "NoBoundStateError");
  py::register_exception<ptd::inapplicable_error>(m, "InapplicableError");

  m.def(
      "energy",
      [](int D, int ell, int n_r, double alpha, double V0, double mu, double hbar) {
        return ptd::energy(make_params(alpha, V0, mu, hbar), make_state(D, ell, n_r)).energy;
      },
      py::arg("D"), py::arg("ell"), py::arg("n_r"), py::arg("alpha"), py::arg("V0") = 1.0,
      py::arg("mu") = 1.0, py::arg("hbar") = 1.0,
      "Closed-form bound-state energy; raises NoBoundStateError for unbound labels.");

  m.def(
      "energy_principal",
      [](int n, int D, double alpha, double V0, double mu, double hbar) {
        return ptd::energy_principal(make_params(alpha, V0, mu, hbar), n, D);
      },
      py::arg("n"), py::arg("D"), py::arg("alpha"), py::arg("V0") = 1.0, py::arg("mu") = 1.0,
      py::arg("hbar") = 1.0,
      "Level addressed by the principal number n = 2 n_r + ell.");

  m.def(
      "is_bound",
      [](int D, int ell, int n_r, double alpha, double V0, double mu, double hbar) {
        return ptd::is_bound(make_params(alpha, V0, mu, hbar), make_state(D, ell, n_r));
      },
      py::arg("D"), py::arg("ell"), py::arg("n_r"), py::arg("alpha"), py::arg("V0") = 1.0,
      py::arg("mu") = 1.0, py::arg("hbar") = 1.0);

  m.def(
      "critical_alpha",
      [](int n, int D, double V0, double mu, double hbar) {
        return ptd::critical_alpha(make_params(1.0, V0, mu, hbar), n, D);
      },
      py::arg("n"), py::arg("D"), py::arg("V0") = 1.0, py::arg("mu") = 1.0,
      py::arg("hbar") = 1.0,
      "Largest alpha keeping level n bound; raises InapplicableError for (n, D) = (0, 1).");

  m.def(
      "count_bound_states",
      [](int D, int ell, double alpha, double V0, double mu, double hbar) {
        return ptd::count_bound_states(make_params(alpha, V0, mu, hbar), D, ell);
      },
      py::arg("D"), py::arg("ell"), py::arg("alpha"), py::arg("V0") = 1.0, py::arg("mu") = 1.0,
      py::arg("hbar") = 1.0);

  m.def(
      "norm_constant",
      [](int D, int ell, int n_r, double alpha, double V0, double mu, double hbar,
         const std::string& mode) {
        return ptd::solve_state(make_params(alpha, V0, mu, hbar), make_state(D, ell, n_r),
                                mode_of(mode))
            .norm_constant;
      },
      py::arg("D"), py::arg("ell"), py::arg("n_r"), py::arg("alpha"), py::arg("V0") = 1.0,
      py::arg("mu") = 1.0, py::arg("hbar") = 1.0, py::arg("mode") = "corrected");

  m.def(
      "radial_wavefunction",
      [](int D, int ell, int n_r, double alpha, const std::vector<double>& r, double V0,
         double mu, double hbar, const std::string& mode) {
        const auto sol = ptd::solve_state(make_params(alpha, V0, mu, hbar),
                                          make_state(D, ell, n_r), mode_of(mode));
        std::vector<double> out;
        out.reserve(r.size());
        for (double ri : r) out.push_back(ptd::radial_r(sol, ri));
        return out;
      },
      py::arg("D"), py::arg("ell"), py::arg("n_r"), py::arg("alpha"), py::arg("r"),
      py::arg("V0") = 1.0, py::arg("mu") = 1.0, py::arg("hbar") = 1.0,
      py::arg("mode") = "corrected",
      "Normalized radial factor R evaluated at the given radii.");

  m.def(
      "expectation_report",
      [](int D, int ell, int n_r, double alpha, double V0, double mu, double hbar) {
        const auto rep =
            ptd::report(make_params(alpha, V0, mu, hbar), make_state(D, ell, n_r));
        py::dict d;
        d["energy"] = rep.energy;
        d["inv_r2_hft"] = rep.inv_r2;
        d["inv_r2_quad"] = rep.inv_r2_quad;
        d["potential_hft"] = rep.potential;
        d["potential_quad"] = rep.potential_quad;
        d["kinetic"] = rep.kinetic;
        return d;
      },
      py::arg("D"), py::arg("ell"), py::arg("n_r"), py::arg("alpha"), py::arg("V0") = 1.0,
      py::arg("mu") = 1.0, py::arg("hbar") = 1.0,
      "Hellmann-Feynman and quadrature expectation values; NaN marks "
      "inapplicable or divergent entries.");

  m.def(
      "numerov_energy",
      [](int D, int ell, int n_r, double alpha, double V0, double mu, double hbar,
         const std::string& centrifugal) {
        ptd::CentrifugalMode cm;
        if (centrifugal == "approx")
          cm = ptd::CentrifugalMode::approx;
        else if (centrifugal == "exact")
          cm = ptd::CentrifugalMode::exact;
        else
          throw std::invalid_argument("centrifugal must be 'approx' or 'exact'");
        const auto p = make_params(alpha, V0, mu, hbar);
        const auto ode = ptd::RadialODE::with_default_grid(cm, p, D, ell);
        return ptd::find_eigenvalue(ode, n_r).energy;
      },
      py::arg("D"), py::arg("ell"), py::arg("n_r"), py::arg("alpha"), py::arg("V0") = 1.0,
      py::arg("mu") = 1.0, py::arg("hbar") = 1.0, py::arg("centrifugal") = "approx",
      "Independent shooting-method eigenvalue of the radial equation.");
}
