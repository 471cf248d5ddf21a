#pragma once

#include <cstddef>
#include <stdexcept>

namespace ptd {

// ln Gamma(x) for x > 0.  Argument shifted into the asymptotic range by the
// recurrence Gamma(x+1) = x Gamma(x), then a fixed Bernoulli tail; relative
// error of exp(ln_gamma) below 1e-13 across (0, 1e6].
double ln_gamma(double x);

// Euler Beta(x, y) = Gamma(x) Gamma(y) / Gamma(x + y), x, y > 0.
double beta(double x, double y);

// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
double pochhammer(double a, int n);

// Terminating Gauss series 2F1(a, b; c; z) with a = -n a non-positive integer.
// Throws std::domain_error if c hits a pole inside the n-term sum.
double hyp2f1_terminating(int a, double b, double c, double z);

struct JacobiParams {
  double a;  // > -1
  double b;  // > -1
  int n;     // >= 0

  void validate() const;
};

// Jacobi polynomial P_n^(a,b)(x) by the standard three-term recurrence.
// Templated so diagnostics can run the recurrence in extended precision.
template <typename Real>
Real jacobi_recurrence(unsigned n, Real a, Real b, Real x) {
  Real y0 = 1;
  if (n == 0) return y0;
  Real y1 = (a - b) / 2 + (1 + (a + b) / 2) * x;
  for (unsigned k = 2; k <= n; ++k) {
    const Real denom = 2 * k * (k + a + b) * (2 * k + a + b - 2);
    const Real gamma1 = (2 * k + a + b - 1) * ((2 * k + a + b) * (2 * k + a + b - 2) * x + a * a - b * b);
    const Real gamma0 = -2 * (k + a - 1) * (k + b - 1) * (2 * k + a + b);
    const Real y2 = (gamma1 * y1 + gamma0 * y0) / denom;
    y0 = y1;
    y1 = y2;
  }
  return y1;
}

double jacobi(const JacobiParams& jp, double x);

}  // namespace ptd
