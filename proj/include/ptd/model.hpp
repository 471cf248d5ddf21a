#pragma once

#include "ptd/errors.hpp"

namespace ptd {

// Well depth, inverse range and medium constants of the hyperbolic well
// V(r) = -V0 / cosh^2(alpha r).  Units are the caller's; hbar = mu = 1 by default.
struct PhysicalParams {
  double V0 = 1.0;
  double alpha = 1.0;
  double mu = 1.0;
  double hbar = 1.0;

  void validate() const;  // throws std::invalid_argument unless all finite and > 0
};

// Quantum numbers of a hyperradial channel: dimension D >= 1, orbital ell >= 0,
// radial node count n_r >= 0.
struct StateLabel {
  int D = 3;
  int ell = 0;
  int n_r = 0;

  void validate() const;
  int n() const { return 2 * n_r + ell; }   // principal number
  int k() const { return D + 2 * ell; }     // channel index D + 2 ell
};

// Dimensionless reduction of the channel.  gamma = (k-1)(k-3)/4 is the
// centrifugal strength, delta = 2 mu V0 / (hbar alpha)^2 the well strength,
// v = (k-1)/2 the small-r exponent, epsilon the decay exponent of the
// radially-indexed branch (may be <= 0; boundness is a separate predicate).
struct ReducedParams {
  double k;
  double beta;     // ell (ell + D - 2)
  double gamma;
  double delta;
  double v;
  double epsilon;  // [-2(2 n_r + 1) - sqrt(1+4 gamma) + sqrt(1+4 delta)] / 2
};

ReducedParams reduce(const PhysicalParams& p, const StateLabel& st);

// Half the binding bracket -(4 n_r + 2 ell + D) + sqrt(1 + 4 delta);
// positive exactly for normalizable states.  Coincides with
// ReducedParams::epsilon whenever k >= 2.
double binding_epsilon(const PhysicalParams& p, const StateLabel& st);

bool is_bound(const PhysicalParams& p, const StateLabel& st);

double potential_value(const PhysicalParams& p, double r);  // r >= 0

// The centrifugal kernel 1/r^2 and its sinh-substituted stand-in
// alpha^2/sinh^2(alpha r); approx < exact for every r > 0 and the ratio
// tends to 1 as alpha r -> 0.
struct CentrifugalPair {
  double exact;
  double approx;
};

CentrifugalPair centrifugal_pair(const PhysicalParams& p, double r);  // r > 0

}  // namespace ptd
