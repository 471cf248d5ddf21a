#include "ptd/expectation.hpp"

#include <cmath>
#include <limits>

#include "ptd/errors.hpp"
#include "ptd/quadrature.hpp"
#include "ptd/spectrum.hpp"

namespace ptd {

namespace {

double bracket_or_throw(const PhysicalParams& p, const StateLabel& st) {
  const double eps = binding_epsilon(p, st);
  if (!(eps > 0.0))
    throw no_bound_state_error("expectation: level is not bound at this alpha", 2.0 * eps);
  return 2.0 * eps;
}

}  // namespace

double inv_r2_hft(const PhysicalParams& p, const StateLabel& st) {
  const double B = bracket_or_throw(p, st);
  const int divisor = 2 * st.ell + st.D - 2;
  if (divisor <= 0)
    throw inapplicable_error("inv_r2_hft: the angular-derivative divisor 2 ell + D - 2 vanishes");
  return p.alpha * p.alpha * B / divisor;
}

double potential_hft(const PhysicalParams& p, const StateLabel& st) {
  const double B = bracket_or_throw(p, st);
  const double root = std::sqrt(1.0 + 8.0 * p.mu * p.V0 / (p.hbar * p.hbar * p.alpha * p.alpha));
  return -p.V0 * B / root;
}

double kinetic_hft(const PhysicalParams& p, const StateLabel& st) {
  return energy(p, st).energy - potential_hft(p, st);
}

double expectation_quadrature(const PhysicalParams& p, const StateLabel& st, Observable obs,
                              double rel_tol) {
  const RadialSolution sol = solve_state(p, st, ExponentMode::corrected);
  const int k = st.k();
  if (k <= 2 && obs != Observable::potential)
    throw divergent_integral_error(
        "expectation_quadrature: integrand is not integrable at the origin for D + 2 ell <= 2");

  const double alpha = p.alpha;
  switch (obs) {
    case Observable::inv_r2:
      return integrate_half_line(
          [&](double r) {
            const double R = radial_r(sol, r);
            return R * R / (r * r);
          },
          rel_tol);
    case Observable::sinh_centrifugal:
      return integrate_half_line(
          [&](double r) {
            const double R = radial_r(sol, r);
            const double sh = std::sinh(alpha * r);
            return R * R * alpha * alpha / (sh * sh);
          },
          rel_tol);
    case Observable::potential:
      return integrate_half_line(
          [&](double r) {
            const double R = radial_r(sol, r);
            return R * R * potential_value(p, r);
          },
          rel_tol);
    case Observable::kinetic: {
      const double grad = integrate_half_line(
          [&](double r) {
            const double d = radial_r_derivative(sol, r);
            return d * d;
          },
          rel_tol);
      const double pref = p.hbar * p.hbar / (2.0 * p.mu);
      const double gamma = sol.reduced.gamma;
      double centrifugal = 0.0;
      if (gamma != 0.0)
        centrifugal = gamma * expectation_quadrature(p, st, Observable::sinh_centrifugal, rel_tol);
      return pref * (grad + centrifugal);
    }
  }
  throw std::invalid_argument("expectation_quadrature: unknown observable");
}

double dE_dV0_fd(const PhysicalParams& p, const StateLabel& st, double rel_step) {
  if (!(rel_step > 0.0)) throw std::invalid_argument("dE_dV0_fd: rel_step must be > 0");
  PhysicalParams up = p, dn = p;
  up.V0 = p.V0 * (1.0 + rel_step);
  dn.V0 = p.V0 * (1.0 - rel_step);
  const double ep = energy(up, st).energy;
  const double em = energy(dn, st).energy;
  return (ep - em) / (2.0 * p.V0 * rel_step);
}

ExpectationReport report(const PhysicalParams& p, const StateLabel& st) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  ExpectationReport rep{st, energy(p, st).energy, nan, nan, 0.0, 0.0, 0.0};
  try {
    rep.inv_r2 = inv_r2_hft(p, st);
  } catch (const inapplicable_error&) {
  }
  try {
    rep.inv_r2_quad = expectation_quadrature(p, st, Observable::inv_r2);
  } catch (const divergent_integral_error&) {
  }
  rep.potential = potential_hft(p, st);
  rep.potential_quad = expectation_quadrature(p, st, Observable::potential);
  rep.kinetic = kinetic_hft(p, st);
  return rep;
}

}  // namespace ptd
