#include "ptd/nu_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ptd {

int Poly::degree() const {
  if (c_[2] != 0.0) return 2;
  if (c_[1] != 0.0) return 1;
  if (c_[0] != 0.0) return 0;
  return -1;
}

NUProblem::NUProblem(Poly tt, Poly s, Poly st) : tau_tilde(tt), sigma(s), sigma_tilde(st) {
  if (tau_tilde.degree() > 1) throw std::invalid_argument("NUProblem: tau_tilde must have degree <= 1");
  if (sigma.degree() < 0) throw std::invalid_argument("NUProblem: sigma must not be the zero polynomial");
}

namespace {

// Radicand of the pi square root: ((sigma' - tau_tilde)/2)^2 - sigma_tilde + t sigma.
Poly radicand(const NUProblem& prob, double t) {
  const Poly p = 0.5 * (prob.sigma.derivative() - prob.tau_tilde);
  const Poly p2(p[0] * p[0], 2.0 * p[0] * p[1], p[1] * p[1]);
  return p2 - prob.sigma_tilde + t * prob.sigma;
}

}  // namespace

std::vector<double> t_candidates(const NUProblem& prob) {
  // The radicand u + t sigma has a double root in s exactly when its own
  // discriminant, a quadratic in t, vanishes.
  const Poly u = radicand(prob, 0.0);
  const Poly& sg = prob.sigma;
  const double c2 = sg[1] * sg[1] - 4.0 * sg[0] * sg[2];
  const double c1 = 2.0 * u[1] * sg[1] - 4.0 * (u[2] * sg[0] + u[0] * sg[2]);
  const double c0 = u[1] * u[1] - 4.0 * u[0] * u[2];

  std::vector<double> roots;
  if (c2 == 0.0) {
    if (c1 != 0.0) roots.push_back(-c0 / c1);
    return roots;
  }
  const double disc = c1 * c1 - 4.0 * c2 * c0;
  if (disc < 0.0) return roots;
  if (disc == 0.0) {
    roots.push_back(-c1 / (2.0 * c2));
    return roots;
  }
  const double sq = std::sqrt(disc);
  const double q = c1 >= 0.0 ? -0.5 * (c1 + sq) : -0.5 * (c1 - sq);
  roots.push_back(q / c2);
  roots.push_back(q != 0.0 ? c0 / q : 0.0);
  std::sort(roots.begin(), roots.end());
  return roots;
}

Poly pi_for(const NUProblem& prob, double t, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("pi_for: sign must be +1 or -1");
  const Poly w = radicand(prob, t);

  const double cross = w[1] * w[1] - 4.0 * w[0] * w[2];
  const double scale =
      std::max({w[0] * w[0], w[1] * w[1], w[2] * w[2], std::abs(4.0 * w[0] * w[2]), 1e-300});
  if (std::abs(cross) > 1e-10 * scale || w[2] < -1e-10 * std::sqrt(scale) ||
      w[0] < -1e-10 * std::sqrt(scale))
    throw unsupported_shape_error("pi_for: radicand is not the square of a linear polynomial");

  // Square root with nonnegative leading coefficient; sign picks the branch.
  double l1 = std::sqrt(std::max(w[2], 0.0));
  double l0;
  if (l1 > 0.0)
    l0 = w[1] / (2.0 * l1);
  else
    l0 = std::sqrt(std::max(w[0], 0.0));

  const Poly p = 0.5 * (prob.sigma.derivative() - prob.tau_tilde);
  return p + static_cast<double>(sign) * Poly(l0, l1);
}

Admissibility admissible(const NUProblem& prob, const Poly& pi) {
  const Poly tau = prob.tau_tilde + 2.0 * pi;
  return {tau, tau[1] < 0.0};
}

NUSolution solve_branch(const NUProblem& prob, double t, int sign) {
  NUSolution sol;
  sol.t = t;
  sol.pi = pi_for(prob, t, sign);
  sol.tau = prob.tau_tilde + 2.0 * sol.pi;
  sol.lambda = t + sol.pi[1];
  return sol;
}

double quantization_residual(const NUProblem& prob, const NUSolution& sol, int n) {
  if (n < 0) throw std::invalid_argument("quantization_residual: n must be >= 0");
  const double lambda_n = -n * sol.tau[1] - static_cast<double>(n) * (n - 1) * prob.sigma[2];
  return sol.lambda - lambda_n;
}

WeightExponents weight_exponents(const Poly& sigma, const Poly& tau) {
  if (tau.degree() > 1) throw std::invalid_argument("weight_exponents: tau must have degree <= 1");
  // sigma rho' = (tau - sigma') rho, with rho = s^a (1-s)^b.
  if (sigma[0] == 0.0 && sigma[1] != 0.0 && sigma[2] == -sigma[1]) {
    const double c = sigma[1];  // sigma = c s(1-s)
    const double a = tau[0] / c - 1.0;
    const double b = -(tau[0] + tau[1]) / c - 1.0;
    return {a, b};
  }
  if (sigma[0] == 0.0 && sigma[1] != 0.0 && sigma[2] == 0.0) {
    if (tau[1] != 0.0)
      throw unsupported_shape_error("weight_exponents: sigma = c s requires constant tau");
    return {tau[0] / sigma[1] - 1.0, 0.0};
  }
  if (sigma[1] == 0.0 && sigma[2] == 0.0 && sigma[0] != 0.0) {
    if (tau.degree() >= 0)
      throw unsupported_shape_error("weight_exponents: constant sigma requires tau = 0");
    return {0.0, 0.0};
  }
  throw unsupported_shape_error("weight_exponents: sigma must be c s(1-s), c s, or a nonzero constant");
}

std::vector<double> rodrigues(const Poly& sigma, double a, double b, int n) {
  if (n < 0 || n > 8) throw std::out_of_range("rodrigues: n must be in [0, 8]");

  // sigma^n rho must stay inside the span of s^{a+i}(1-s)^{b+j} terms, which
  // restricts sigma to the same shapes as weight_exponents.
  int dp0, dq0;
  double c;
  if (sigma[0] == 0.0 && sigma[1] != 0.0 && sigma[2] == -sigma[1]) {
    c = sigma[1];
    dp0 = n;
    dq0 = n;
  } else if (sigma[0] == 0.0 && sigma[1] != 0.0 && sigma[2] == 0.0 && b == 0.0) {
    c = sigma[1];
    dp0 = n;
    dq0 = 0;
  } else if (sigma[1] == 0.0 && sigma[2] == 0.0 && sigma[0] != 0.0 && a == 0.0 && b == 0.0) {
    c = sigma[0];
    dp0 = 0;
    dq0 = 0;
  } else {
    throw unsupported_shape_error("rodrigues: unsupported sigma shape for this weight");
  }

  // Terms coef[dp][dq] s^{a+dp}(1-s)^{b+dq}; each derivative moves weight from
  // (dp,dq) to (dp-1,dq) and (dp,dq-1).
  const int m = 2 * n + 1;
  std::vector<double> cur(static_cast<std::size_t>(m) * m, 0.0);
  std::vector<double> nxt(cur.size());
  auto at = [m](std::vector<double>& v, int dp, int dq) -> double& {
    return v[static_cast<std::size_t>(dp) * m + dq];
  };
  at(cur, dp0, dq0) = std::pow(c, n);

  for (int step = 0; step < n; ++step) {
    std::fill(nxt.begin(), nxt.end(), 0.0);
    for (int dp = 0; dp <= dp0; ++dp)
      for (int dq = 0; dq <= dq0; ++dq) {
        const double coef = at(cur, dp, dq);
        if (coef == 0.0) continue;
        if (a + dp != 0.0) {
          if (dp == 0) throw unsupported_shape_error("rodrigues: derivative leaves the term basis");
          at(nxt, dp - 1, dq) += coef * (a + dp);
        }
        if (b + dq != 0.0) {
          if (dq == 0) throw unsupported_shape_error("rodrigues: derivative leaves the term basis");
          at(nxt, dp, dq - 1) -= coef * (b + dq);
        }
      }
    cur.swap(nxt);
  }

  // Expand the surviving s^{dp}(1-s)^{dq} terms into the power basis.
  std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
  for (int dp = 0; dp <= dp0; ++dp)
    for (int dq = 0; dq <= dq0; ++dq) {
      const double coef = at(cur, dp, dq);
      if (coef == 0.0) continue;
      double binom = 1.0;
      for (int j = 0; j <= dq; ++j) {
        out[static_cast<std::size_t>(dp + j)] += coef * binom * (j % 2 == 0 ? 1.0 : -1.0);
        binom = binom * (dq - j) / (j + 1);
      }
    }
  return out;
}

}  // namespace ptd
