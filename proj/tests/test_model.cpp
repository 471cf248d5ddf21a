#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "ptd/model.hpp"

using namespace ptd;

TEST_CASE("parameter validation") {
  PhysicalParams p;
  CHECK_NOTHROW(p.validate());
  for (double* field : {&p.V0, &p.alpha, &p.mu, &p.hbar}) {
    const double keep = *field;
    *field = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    *field = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    *field = keep;
  }

  StateLabel st;
  CHECK_NOTHROW(st.validate());
  CHECK_THROWS_AS((StateLabel{0, 0, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((StateLabel{3, -1, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((StateLabel{3, 0, -1}.validate()), std::invalid_argument);
}

TEST_CASE("label arithmetic") {
  const StateLabel st{5, 2, 1};
  CHECK(st.n() == 4);   // 2 n_r + ell
  CHECK(st.k() == 9);   // D + 2 ell
  CHECK(StateLabel{1, 0, 0}.k() == 1);
}

TEST_CASE("reduction to the channel parameters") {
  PhysicalParams p;  // V0 = mu = hbar = alpha = 1
  const auto rp = reduce(p, {3, 0, 0});
  CHECK(rp.k == 3);
  CHECK(rp.gamma == 0.0);       // (k-1)(k-3)/4
  CHECK(rp.delta == 2.0);       // 2 mu V0 / (hbar alpha)^2
  CHECK(rp.v == 1.0);           // (k-1)/2
  CHECK(rp.epsilon == doctest::Approx(0.0).epsilon(1e-15));

  PhysicalParams p05;
  p05.alpha = 0.5;
  const auto rp2 = reduce(p05, {3, 1, 1});
  CHECK(rp2.k == 5);
  CHECK(rp2.gamma == 2.0);
  CHECK(rp2.delta == 8.0);
  CHECK(rp2.v == 2.0);
  // 0.5 (-2(2 n_r + 1) - sqrt(1+4 gamma) + sqrt(1+4 delta)); negative here,
  // the (3,1,1) channel is unbound at alpha = 0.5.
  CHECK(rp2.epsilon == doctest::Approx(0.5 * (-6.0 - 3.0 + std::sqrt(33.0))).epsilon(1e-14));
}

TEST_CASE("binding exponent and the 1D parity split") {
  PhysicalParams p;
  const StateLabel g1{1, 0, 0};
  // Even-parity ground state: eps = (-(4 n_r + 2 ell + D) + sqrt(1+4 delta))/2.
  CHECK(binding_epsilon(p, g1) == doctest::Approx(1.0).epsilon(1e-15));
  // The literal odd-branch reduction lands on the threshold instead.
  CHECK(reduce(p, g1).epsilon == doctest::Approx(0.0).epsilon(1e-15));

  // For k >= 3 the two expressions coincide.
  PhysicalParams p05;
  p05.alpha = 0.5;
  const StateLabel st{3, 1, 0};
  CHECK(binding_epsilon(p05, st) == doctest::Approx(reduce(p05, st).epsilon).epsilon(1e-15));
}

TEST_CASE("boundness classification") {
  PhysicalParams p;
  CHECK(is_bound(p, {1, 0, 0}));
  CHECK(!is_bound(p, {3, 0, 0}));  // bracket exactly zero: threshold is unbound
  PhysicalParams p05;
  p05.alpha = 0.5;
  CHECK(is_bound(p05, {3, 0, 0}));
  CHECK(!is_bound(p05, {3, 0, 5}));
}

TEST_CASE("potential evaluation") {
  PhysicalParams p;
  CHECK(potential_value(p, 0.0) == -1.0);
  CHECK(potential_value(p, 1.0) == doctest::Approx(-1.0 / std::pow(std::cosh(1.0), 2)).epsilon(1e-15));
  PhysicalParams p2;
  p2.V0 = 3.0;
  p2.alpha = 0.25;
  CHECK(potential_value(p2, 2.0) ==
        doctest::Approx(-3.0 / std::pow(std::cosh(0.5), 2)).epsilon(1e-15));
}

TEST_CASE("centrifugal kernels") {
  PhysicalParams p;
  const auto pair1 = centrifugal_pair(p, 3.0);
  CHECK(pair1.exact == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  CHECK(pair1.approx == doctest::Approx(0.00996434577114763).epsilon(1e-13));

  // Small alpha r: the sinh kernel approaches 1/r^2 from below at O((alpha r)^2).
  PhysicalParams p01;
  p01.alpha = 0.1;
  const auto pair2 = centrifugal_pair(p01, 0.5);
  CHECK(pair2.exact == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(pair2.approx == doctest::Approx(3.99666833267219).epsilon(1e-13));
  CHECK(pair2.approx < pair2.exact);
}
