#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "ptd/errors.hpp"
#include "ptd/oracle.hpp"
#include "ptd/spectrum.hpp"

using namespace ptd;

namespace {

PhysicalParams params_alpha(double a) {
  PhysicalParams p;
  p.alpha = a;
  return p;
}

}  // namespace

TEST_CASE("eigenvalue matches the closed form in the approximate channel") {
  const PhysicalParams p = params_alpha(0.5);
  const RadialODE ode = RadialODE::with_default_grid(CentrifugalMode::approx, p, 3, 0);
  const EigenResult res = find_eigenvalue(ode, 0);
  CHECK(std::abs(res.energy - (-0.23539450377412)) < 1e-6);
  CHECK(res.node_count == 0);
  CHECK(std::abs(res.boundary_mismatch) < 1e-9);
}

TEST_CASE("one-dimensional ground state at alpha = 1") {
  const PhysicalParams p = params_alpha(1.0);
  const RadialODE ode = RadialODE::with_default_grid(CentrifugalMode::approx, p, 1, 0);
  const EigenResult res = find_eigenvalue(ode, 0);
  CHECK(std::abs(res.energy - (-0.5)) < 1e-6);
}

TEST_CASE("excited level in a deeper well") {
  PhysicalParams p = params_alpha(0.25);
  const RadialODE ode = RadialODE::with_default_grid(CentrifugalMode::approx, p, 3, 0);
  const EigenResult res = find_eigenvalue(ode, 1);
  CHECK(std::abs(res.energy - energy(p, {3, 0, 1}).energy) < 1e-6);
  CHECK(res.node_count == 1);
}

TEST_CASE("node count steps as E crosses a level") {
  const PhysicalParams p = params_alpha(0.5);
  const RadialODE ode = RadialODE::with_default_grid(CentrifugalMode::approx, p, 3, 0);
  const double E0 = energy(p, {3, 0, 0}).energy;
  CHECK(integrate_numerov(ode, E0 * (1.0 + 1e-3)).node_count == 0);  // below the level
  CHECK(integrate_numerov(ode, E0 * (1.0 - 1e-3)).node_count == 1);  // above it
}

TEST_CASE("exact centrifugal channel loses the threshold state") {
  // At alpha = 1 the approximate D = 3 channel is exactly at threshold and the
  // exact 1/r^2 channel binds nothing: the search runs out of node brackets.
  const PhysicalParams p = params_alpha(1.0);
  const RadialODE ode = RadialODE::with_default_grid(CentrifugalMode::exact, p, 3, 0);
  bool threw = false;
  try {
    find_eigenvalue(ode, 0);
  } catch (const eigenvalue_not_found_error& e) {
    threw = true;
    CHECK(e.max_nodes_seen == 0);
  }
  CHECK(threw);
}

TEST_CASE("exact centrifugal channel sits above the surrogate") {
  // 1/r^2 dominates alpha^2/sinh^2(alpha r) pointwise, so the exact-mode level
  // lies above the approximate one, by roughly gamma alpha^2 / 3 at small alpha.
  const PhysicalParams p = params_alpha(0.1);
  const RadialODE approx = RadialODE::with_default_grid(CentrifugalMode::approx, p, 3, 1);
  const RadialODE exact = RadialODE::with_default_grid(CentrifugalMode::exact, p, 3, 1);
  const double ea = find_eigenvalue(approx, 0).energy;
  const double ee = find_eigenvalue(exact, 0).energy;
  CHECK(std::abs(ea - energy(p, {3, 1, 0}).energy) < 1e-6);
  CHECK(ee > ea);
  CHECK(ee - ea < 2e-2);
  CHECK(ee - ea > 1e-4);
}

TEST_CASE("grid self-enlargement reaches a very shallow state") {
  // D = 1, alpha = 10: binding epsilon ~ 0.022, decay length ~ 4.5, so the
  // default 30/alpha = 3 window must be enlarged before the tail fits.
  const PhysicalParams p = params_alpha(10.0);
  const RadialODE ode = RadialODE::with_default_grid(CentrifugalMode::approx, p, 1, 0);
  const EigenResult res = find_eigenvalue(ode, 0);
  CHECK(std::abs(res.energy - energy(p, {1, 0, 0}).energy) < 1e-6);
}

TEST_CASE("effective potential shapes") {
  const PhysicalParams p = params_alpha(0.5);
  const RadialODE ode = RadialODE::with_default_grid(CentrifugalMode::approx, p, 3, 1);
  // Repulsive core, attractive well, decaying tail.
  CHECK(ode.effective_potential(0.01) > 0.0);
  CHECK(ode.effective_potential(2.0) < 0.0);
  CHECK(std::abs(ode.effective_potential(25.0)) < 1e-3);
  // ell = 0, D = 3 has no centrifugal barrier: pure well.
  const RadialODE s = RadialODE::with_default_grid(CentrifugalMode::approx, p, 3, 0);
  CHECK(s.effective_potential(0.01) == doctest::Approx(potential_value(p, 0.01)).epsilon(1e-10));
}
