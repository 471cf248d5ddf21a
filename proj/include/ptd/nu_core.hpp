#pragma once

#include <array>
#include <vector>

#include "ptd/errors.hpp"

namespace ptd {

// Real polynomial of degree <= 2, constant term first.  Coefficients are
// exact doubles; degree() is the index of the highest nonzero coefficient
// (-1 for the zero polynomial).
class Poly {
 public:
  Poly() = default;
  Poly(double c0, double c1 = 0.0, double c2 = 0.0) : c_{c0, c1, c2} {}

  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  int degree() const;
  double eval(double s) const { return (c_[2] * s + c_[1]) * s + c_[0]; }
  Poly derivative() const { return Poly(c_[1], 2.0 * c_[2]); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    return Poly(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]);
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    return Poly(a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]);
  }
  friend Poly operator*(double f, const Poly& a) {
    return Poly(f * a.c_[0], f * a.c_[1], f * a.c_[2]);
  }

 private:
  std::array<double, 3> c_{};
};

// Hypergeometric-type problem y'' + (tau_tilde/sigma) y' + (sigma_tilde/sigma^2) y = 0.
struct NUProblem {
  Poly tau_tilde;    // degree <= 1
  Poly sigma;        // degree <= 2, not identically zero
  Poly sigma_tilde;  // degree <= 2

  NUProblem(Poly tt, Poly s, Poly st);
};

// One algebraic branch of the reduction: linear pi, tau = tau_tilde + 2 pi,
// eigen-parameter lambda = t + pi'.
struct NUSolution {
  double t = 0.0;
  Poly pi;
  Poly tau;
  double lambda = 0.0;
};

// Real t values making the pi radicand a perfect square (double root of the
// quadratic discriminant), ascending and deduplicated.  Complex roots give an
// empty list.
std::vector<double> t_candidates(const NUProblem& prob);

// Linear pi for one (t, sign) branch.  Throws unsupported_shape_error when the
// radicand at t is not a perfect square (cross-coefficient checked at 1e-10
// relative).
Poly pi_for(const NUProblem& prob, double t, int sign);

struct Admissibility {
  Poly tau;
  bool ok;  // tau' strictly negative
};

Admissibility admissible(const NUProblem& prob, const Poly& pi);

NUSolution solve_branch(const NUProblem& prob, double t, int sign);

// lambda - [-n tau' - n(n-1) sigma''/2]; vanishes exactly at quantized branches.
double quantization_residual(const NUProblem& prob, const NUSolution& sol, int n);

struct WeightExponents {
  double a;
  double b;
};

// Exponents of rho(s) = s^a (1-s)^b solving (sigma rho)' = tau rho.  Supported
// sigma shapes: c s(1-s); c s (requires tau' = 0); nonzero constants (requires
// tau = 0).  Anything else throws unsupported_shape_error.
WeightExponents weight_exponents(const Poly& sigma, const Poly& tau);

// Rodrigues polynomial y_n = rho^{-1} d^n/ds^n [sigma^n rho] with
// rho = s^a (1-s)^b and B_n = 1, returned constant-term-first.  n <= 8.
// Proportional to P_n^(a,b)(1-2s) when sigma is proportional to s(1-s).
std::vector<double> rodrigues(const Poly& sigma, double a, double b, int n);

}  // namespace ptd
