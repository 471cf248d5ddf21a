#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "ptd/errors.hpp"
#include "ptd/quadrature.hpp"
#include "ptd/specfun.hpp"
#include "ptd/wavefunction.hpp"

using namespace ptd;

namespace {

PhysicalParams params_alpha(double a) {
  PhysicalParams p;
  p.alpha = a;
  return p;
}

}  // namespace

TEST_CASE("frozen normalization constants") {
  const PhysicalParams p = params_alpha(0.25);
  CHECK(normalization_series(p, {3, 0, 0}) ==
        doctest::Approx(2.28860277664654).epsilon(1e-12));
  CHECK(normalization_series(p, {3, 0, 1}) ==
        doctest::Approx(1.27518149913999).epsilon(1e-12));
  CHECK(normalization_series(p, {3, 0, 2}) ==
        doctest::Approx(0.303803193516269).epsilon(1e-12));
  CHECK(normalization_series(p, {3, 0, 0}, ExponentMode::as_printed) ==
        doctest::Approx(10.7809163927092).epsilon(1e-12));
  CHECK(normalization_series(p, {3, 0, 1}, ExponentMode::as_printed) ==
        doctest::Approx(2.29283139331312).epsilon(1e-12));
  CHECK(normalization_series(p, {3, 0, 2}, ExponentMode::as_printed) ==
        doctest::Approx(0.315821030580992).epsilon(1e-12));

  const PhysicalParams h = params_alpha(0.5);
  CHECK(solve_state(h, {3, 0, 0}).norm_constant ==
        doctest::Approx(1.5044558516484).epsilon(1e-12));
}

TEST_CASE("series and quadrature normalizations agree in both modes") {
  // (3, 0, n_r <= 2) is bound at alpha = 0.25; only n_r = 0 survives at 0.5.
  for (const auto& [a, n_r] : {std::pair{0.25, 0}, {0.25, 1}, {0.25, 2}, {0.5, 0}}) {
    const PhysicalParams p = params_alpha(a);
    const StateLabel st{3, 0, n_r};
    for (ExponentMode m : {ExponentMode::corrected, ExponentMode::as_printed}) {
      const double series = normalization_series(p, st, m);
      const double quad = normalization_quadrature(p, st, m);
      CHECK(std::abs(series - quad) / series < 1e-8);
    }
  }
  // Higher channel.
  const PhysicalParams p = params_alpha(0.2);
  const StateLabel st{5, 1, 1};
  CHECK(normalization_quadrature(p, st) ==
        doctest::Approx(normalization_series(p, st)).epsilon(1e-8));
}

TEST_CASE("nodeless closed form of the ground constant") {
  // Corrected mode at n_r = 0: C = sqrt(2 alpha / B(v + 1/2, eps)).
  const PhysicalParams p = params_alpha(0.5);
  const StateLabel st{3, 0, 0};
  const ReducedParams rp = reduce(p, st);
  const double eps = binding_epsilon(p, st);
  const double direct = std::sqrt(2.0 * p.alpha / beta(rp.v + 0.5, eps));
  CHECK(normalization_series(p, st) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("pointwise values and coordinate maps") {
  const PhysicalParams p = params_alpha(0.5);
  const RadialSolution sol = solve_state(p, {3, 0, 0});
  CHECK(radial_s(sol, 0.5) == doctest::Approx(0.66117363856841).epsilon(1e-12));

  for (double r : {0.3, 1.0, 2.5, 7.0}) {
    const double s = std::tanh(p.alpha * r) * std::tanh(p.alpha * r);
    CHECK(radial_r(sol, r) == doctest::Approx(radial_s(sol, s)).epsilon(1e-12));
  }

  // U(r) = r^{-(D-1)/2} R.
  for (double r : {0.4, 1.7, 4.0})
    CHECK(hyperradial_u(sol, r) ==
          doctest::Approx(std::pow(r, -1.0) * radial_r(sol, r)).epsilon(1e-12));

  // The tail stays finite and decaying where tanh saturates to 1.
  const double far = radial_r(sol, 60.0);
  CHECK(far > 0.0);
  CHECK(far < radial_r(sol, 40.0));
}

TEST_CASE("analytic derivatives match finite differences") {
  const PhysicalParams p = params_alpha(0.25);
  const RadialSolution sol = solve_state(p, {3, 1, 1});
  const double h = 1e-6;
  for (double s : {0.15, 0.4, 0.75}) {
    const double fd = (radial_s(sol, s + h) - radial_s(sol, s - h)) / (2.0 * h);
    CHECK(radial_s_derivative(sol, s) == doctest::Approx(fd).epsilon(1e-7));
  }
  for (double r : {0.5, 1.3, 3.1}) {
    const double fd = (radial_r(sol, r + h) - radial_r(sol, r - h)) / (2.0 * h);
    CHECK(radial_r_derivative(sol, r) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("unit norm under independent quadrature") {
  const PhysicalParams p = params_alpha(0.25);
  for (int n_r : {0, 1, 2}) {
    const RadialSolution sol = solve_state(p, {3, 0, n_r});
    const double integral = integrate_half_line(
        [&](double r) { const double R = radial_r(sol, r); return R * R; }, 1e-11);
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("node counts equal the radial quantum number") {
  const PhysicalParams p = params_alpha(0.25);
  CHECK(node_count(solve_state(p, {3, 0, 0})) == 0);
  CHECK(node_count(solve_state(p, {3, 0, 1})) == 1);
  CHECK(node_count(solve_state(p, {3, 0, 2})) == 2);
  CHECK(node_count(solve_state(p, {2, 1, 1})) == 1);
}

TEST_CASE("small-r exponent separates the two conventions") {
  const PhysicalParams p = params_alpha(0.25);
  const StateLabel st{3, 1, 0};  // k = 5: corrected slope 1 + 1 = 2, as-printed 2(2+3-1) = 8
  CHECK(small_r_slope(solve_state(p, st)) == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(small_r_slope(solve_state(p, st, ExponentMode::as_printed)) ==
        doctest::Approx(8.0).epsilon(1e-3));

  const StateLabel ground{3, 0, 0};  // corrected slope (D-1)/2 = 1, as-printed 4
  CHECK(small_r_slope(solve_state(p, ground)) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(small_r_slope(solve_state(p, ground, ExponentMode::as_printed)) ==
        doctest::Approx(4.0).epsilon(1e-3));
}

TEST_CASE("equation residual separates the two conventions") {
  const PhysicalParams p = params_alpha(0.5);
  const RadialSolution ok = solve_state(p, {3, 0, 0});
  CHECK(ode_residual_max(ok) < 1e-6);

  const RadialSolution bad = solve_state(p, {3, 0, 0}, ExponentMode::as_printed);
  CHECK(ode_residual_max(bad) > 1e-2);

  // The toughest fixtures: shallow channels with v <= 1.
  CHECK(ode_residual_max(solve_state(params_alpha(0.25), {2, 0, 0})) < 1e-6);
  CHECK(ode_residual_max(solve_state(params_alpha(0.25), {5, 1, 0})) < 1e-6);
}

TEST_CASE("figure profiles") {
  const PhysicalParams p = params_alpha(0.5);
  const RadialSolution sol = solve_state(p, {3, 0, 0});
  const RadialProfile prof = figure_profile(sol, 0.05, 12.0, 240);
  REQUIRE(prof.samples.size() == 240);
  CHECK(prof.alpha == doctest::Approx(0.5));
  CHECK(prof.samples.front().first == doctest::Approx(0.05));
  CHECK(prof.samples.back().first == doctest::Approx(12.0));
  for (std::size_t i = 0; i < prof.samples.size(); ++i) {
    const auto& [r, absu] = prof.samples[i];
    if (i) CHECK(r > prof.samples[i - 1].first);
    CHECK(absu == doctest::Approx(std::abs(hyperradial_u(sol, r))).epsilon(1e-12));
    CHECK(absu >= 0.0);
  }
}

TEST_CASE("unbound labels are rejected") {
  CHECK_THROWS_AS(solve_state(PhysicalParams{}, StateLabel{3, 0, 0}), no_bound_state_error);
  CHECK_THROWS_AS(solve_state(params_alpha(0.5), StateLabel{3, 0, 5}), no_bound_state_error);
}
