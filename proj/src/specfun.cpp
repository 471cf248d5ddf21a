#include "ptd/specfun.hpp"

#include <cmath>

namespace ptd {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2

// Stirling tail Sum B_{2m} / (2m(2m-1) z^{2m-1}); next omitted term is below
// 2e-16 absolute for z >= 9.
double stirling_tail(double z) {
  const double w = 1.0 / (z * z);
  double tail = 7.0 / 1092.0;
  tail = tail * w - 691.0 / 360360.0;
  tail = tail * w + 1.0 / 1188.0;
  tail = tail * w - 1.0 / 1680.0;
  tail = tail * w + 1.0 / 1260.0;
  tail = tail * w - 1.0 / 360.0;
  tail = tail * w + 1.0 / 12.0;
  return tail / z;
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: x must be > 0");
  double shift = 1.0;
  double z = x;
  while (z < 9.0) {
    shift *= z;
    z += 1.0;
  }
  return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + stirling_tail(z) - std::log(shift);
}

double beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw std::domain_error("beta: x, y must be > 0");
  return std::exp(ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y));
}

double pochhammer(double a, int n) {
  if (n < 0) throw std::domain_error("pochhammer: n must be >= 0");
  double prod = 1.0;
  for (int i = 0; i < n; ++i) prod *= a + i;
  return prod;
}

double hyp2f1_terminating(int a, double b, double c, double z) {
  if (a > 0) throw std::domain_error("hyp2f1_terminating: first parameter must be a non-positive integer");
  const int n = -a;
  if (c <= 0.0 && c == std::floor(c) && -c <= n - 1)
    throw std::domain_error("hyp2f1_terminating: c is a pole inside the terminating sum");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
    sum += term;
  }
  return sum;
}

void JacobiParams::validate() const {
  if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("JacobiParams: a, b must be > -1");
  if (n < 0) throw std::invalid_argument("JacobiParams: n must be >= 0");
}

double jacobi(const JacobiParams& jp, double x) {
  jp.validate();
  return jacobi_recurrence<double>(static_cast<unsigned>(jp.n), jp.a, jp.b, x);
}

}  // namespace ptd
