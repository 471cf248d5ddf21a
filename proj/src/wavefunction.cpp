#include "ptd/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

#include "ptd/errors.hpp"
#include "ptd/quadrature.hpp"
#include "ptd/specfun.hpp"

namespace ptd {

namespace {

// Exponent of tanh(alpha r) in R and the matching Jacobi parameters.
struct Shape {
  double t_exp;  // R ~ tanh^t_exp, i.e. s^{t_exp/2}
  double a;      // first Jacobi parameter; second is epsilon
};

Shape shape_of(const ReducedParams& rp, ExponentMode mode) {
  if (mode == ExponentMode::corrected) return {rp.v, rp.v - 0.5};
  return {4.0 * rp.v, rp.v};
}

double jacobi_at(double a, double b, int n, double x) {
  return jacobi(JacobiParams{a, b, n}, x);
}

// d/dx P_n^{(a,b)}(x) = (n+a+b+1)/2 P_{n-1}^{(a+1,b+1)}(x).
double jacobi_deriv_at(double a, double b, int n, double x) {
  if (n == 0) return 0.0;
  return 0.5 * (n + a + b + 1.0) * jacobi_at(a + 1.0, b + 1.0, n - 1, x);
}

}  // namespace

RadialSolution solve_state(const PhysicalParams& p, const StateLabel& st, ExponentMode mode) {
  p.validate();
  st.validate();
  const double eps = binding_epsilon(p, st);
  if (!(eps > 0.0))
    throw no_bound_state_error("solve_state: level is not bound at this alpha", 2.0 * eps);
  RadialSolution sol;
  sol.params = p;
  sol.state = st;
  sol.reduced = reduce(p, st);
  sol.epsilon = eps;
  sol.mode = mode;
  sol.norm_constant = normalization_series(p, st, mode);
  return sol;
}

double radial_s(const RadialSolution& sol, double s) {
  if (!(s > 0.0 && s < 1.0)) throw std::domain_error("radial_s: s must lie in (0, 1)");
  const Shape sh = shape_of(sol.reduced, sol.mode);
  const double P = jacobi_at(sh.a, sol.epsilon, sol.state.n_r, 1.0 - 2.0 * s);
  return sol.norm_constant * std::pow(s, 0.5 * sh.t_exp) * std::pow(1.0 - s, 0.5 * sol.epsilon) * P;
}

double radial_s_derivative(const RadialSolution& sol, double s) {
  if (!(s > 0.0 && s < 1.0)) throw std::domain_error("radial_s_derivative: s must lie in (0, 1)");
  const Shape sh = shape_of(sol.reduced, sol.mode);
  const double p = 0.5 * sh.t_exp;
  const double q = 0.5 * sol.epsilon;
  const double x = 1.0 - 2.0 * s;
  const double P = jacobi_at(sh.a, sol.epsilon, sol.state.n_r, x);
  const double dP = jacobi_deriv_at(sh.a, sol.epsilon, sol.state.n_r, x);
  const double env = std::pow(s, p) * std::pow(1.0 - s, q);
  double d = env * (-2.0) * dP;
  if (p != 0.0) d += p * std::pow(s, p - 1.0) * std::pow(1.0 - s, q) * P;
  if (q != 0.0) d -= q * std::pow(s, p) * std::pow(1.0 - s, q - 1.0) * P;
  return sol.norm_constant * d;
}

double radial_r(const RadialSolution& sol, double r) {
  if (!(r > 0.0)) throw std::domain_error("radial_r: r must be > 0");
  const Shape sh = shape_of(sol.reduced, sol.mode);
  const double t = std::tanh(sol.params.alpha * r);
  const double c = 1.0 / std::cosh(sol.params.alpha * r);
  const double x = 2.0 * c * c - 1.0;
  const double P = jacobi_at(sh.a, sol.epsilon, sol.state.n_r, x);
  return sol.norm_constant * std::pow(t, sh.t_exp) * std::pow(c, sol.epsilon) * P;
}

double radial_r_derivative(const RadialSolution& sol, double r) {
  if (!(r > 0.0)) throw std::domain_error("radial_r_derivative: r must be > 0");
  const Shape sh = shape_of(sol.reduced, sol.mode);
  const double alpha = sol.params.alpha;
  const double eps = sol.epsilon;
  const double A = sh.t_exp;
  const double t = std::tanh(alpha * r);
  const double c = 1.0 / std::cosh(alpha * r);
  const double x = 2.0 * c * c - 1.0;
  const double P = jacobi_at(sh.a, eps, sol.state.n_r, x);
  const double dP = jacobi_deriv_at(sh.a, eps, sol.state.n_r, x);
  double d = -eps * std::pow(t, A + 1.0) * std::pow(c, eps) * P -
             4.0 * std::pow(t, A + 1.0) * std::pow(c, eps + 2.0) * dP;
  if (A != 0.0) d += A * std::pow(t, A - 1.0) * std::pow(c, eps + 2.0) * P;
  return sol.norm_constant * alpha * d;
}

double hyperradial_u(const RadialSolution& sol, double r) {
  if (!(r > 0.0)) throw std::domain_error("hyperradial_u: r must be > 0");
  return std::pow(r, -0.5 * (sol.state.D - 1)) * radial_r(sol, r);
}

double normalization_series(const PhysicalParams& p, const StateLabel& st, ExponentMode mode) {
  p.validate();
  st.validate();
  const double eps = binding_epsilon(p, st);
  if (!(eps > 0.0))
    throw divergent_integral_error("normalization_series: norm integral diverges (state unbound)");
  const ReducedParams rp = reduce(p, st);
  const Shape sh = shape_of(rp, mode);
  const int n = st.n_r;
  const double a = sh.a;
  const double base = sh.t_exp + 0.5;  // first Beta argument at k = j = 0

  // Hypergeometric expansion of the Jacobi factor in powers of s turns the
  // squared density into a finite double sum of Beta integrals.
  std::vector<double> T(static_cast<std::size_t>(n) + 1);
  double nfact = 1.0;
  for (int i = 2; i <= n; ++i) nfact *= i;
  const double K = pochhammer(a + 1.0, n) / nfact;
  for (int i = 0; i <= n; ++i) {
    double ifact = 1.0;
    for (int j = 2; j <= i; ++j) ifact *= j;
    T[static_cast<std::size_t>(i)] =
        pochhammer(-n, i) * pochhammer(n + a + eps + 1.0, i) / (pochhammer(a + 1.0, i) * ifact);
  }
  double sum = 0.0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      sum += T[static_cast<std::size_t>(i)] * T[static_cast<std::size_t>(j)] *
             beta(base + i + j, eps);
  return std::sqrt(2.0 * p.alpha / (K * K * sum));
}

double normalization_quadrature(const PhysicalParams& p, const StateLabel& st,
                                ExponentMode mode) {
  p.validate();
  st.validate();
  const double eps = binding_epsilon(p, st);
  if (!(eps > 0.0))
    throw divergent_integral_error(
        "normalization_quadrature: norm integral diverges (state unbound)");
  const ReducedParams rp = reduce(p, st);
  const Shape sh = shape_of(rp, mode);
  const int n = st.n_r;
  const double a = sh.a;
  const double P = sh.t_exp - 0.5;  // s exponent of the squared density
  const double Q = eps - 1.0;       // (1-s) exponent

  auto poly2 = [&](double s) {
    const double y = jacobi_at(a, eps, n, 1.0 - 2.0 * s);
    return y * y;
  };

  // Exact power substitutions lift both endpoint exponents to >= 2 so the
  // dyadic panel refinement converges well inside its depth budget even when
  // eps is small (shallow states).
  const int m0 = std::max(1, static_cast<int>(std::ceil(3.0 / (P + 1.0))));
  const int m1 = std::max(1, static_cast<int>(std::ceil(3.0 / (Q + 1.0))));
  auto left = [&](double u) {
    const double s = 0.5 * std::pow(u, m0);
    return m0 * std::pow(0.5, P + 1.0) * std::pow(u, m0 * (P + 1.0) - 1.0) *
           std::pow(1.0 - s, Q) * poly2(s);
  };
  auto right = [&](double u) {
    const double w = 0.5 * std::pow(u, m1);
    return m1 * std::pow(0.5, Q + 1.0) * std::pow(u, m1 * (Q + 1.0) - 1.0) *
           std::pow(1.0 - w, P) * poly2(1.0 - w);
  };
  const double integral =
      integrate_adaptive(left, 0.0, 1.0, 1e-11) + integrate_adaptive(right, 0.0, 1.0, 1e-11);
  return std::sqrt(2.0 * p.alpha / integral);
}

RadialProfile figure_profile(const RadialSolution& sol, double r_min, double r_max,
                             int n_points) {
  if (!(r_min > 0.0) || !(r_max > r_min))
    throw std::invalid_argument("figure_profile: require 0 < r_min < r_max");
  if (n_points < 2) throw std::invalid_argument("figure_profile: need at least 2 points");
  RadialProfile prof;
  prof.state = sol.state;
  prof.alpha = sol.params.alpha;
  prof.samples.reserve(static_cast<std::size_t>(n_points));
  const double h = (r_max - r_min) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) {
    const double r = r_min + i * h;
    prof.samples.emplace_back(r, std::abs(hyperradial_u(sol, r)));
  }
  return prof;
}

int node_count(const RadialSolution& sol) {
  constexpr int kGrid = 4096;
  int nodes = 0;
  int last = 0;
  for (int i = 0; i < kGrid; ++i) {
    const double s = (i + 0.5) / kGrid;
    const double y = radial_s(sol, s);
    const int sign = y > 0.0 ? 1 : (y < 0.0 ? -1 : 0);
    if (sign != 0) {
      if (last != 0 && sign != last) ++nodes;
      last = sign;
    }
  }
  return nodes;
}

double small_r_slope(const RadialSolution& sol) {
  const double r2 = 1e-3 / sol.params.alpha;
  const double r1 = 0.5 * r2;
  return std::log(std::abs(radial_r(sol, r2) / radial_r(sol, r1))) / std::log(r2 / r1);
}

double ode_residual_max(const RadialSolution& sol, double s_lo, double s_hi, int n_samples,
                        double fd_step) {
  if (!(s_lo > 0.0 && s_hi < 1.0 && s_hi > s_lo))
    throw std::invalid_argument("ode_residual_max: require 0 < s_lo < s_hi < 1");
  if (n_samples < 2 || !(fd_step > 0.0))
    throw std::invalid_argument("ode_residual_max: bad sampling parameters");

  const Shape sh = shape_of(sol.reduced, sol.mode);
  const long double a = sh.a;
  const long double b = sol.epsilon;
  const long double p = 0.5L * sh.t_exp;
  const long double q = 0.5L * sol.epsilon;
  const int n = sol.state.n_r;
  auto R = [&](long double s) {
    const long double x = 1.0L - 2.0L * s;
    return powl(s, p) * powl(1.0L - s, q) *
           jacobi_recurrence<long double>(static_cast<unsigned>(n), a, b, x);
  };

  const long double gamma = sol.reduced.gamma;
  const long double delta = sol.reduced.delta;
  const long double e2 = static_cast<long double>(sol.epsilon) * sol.epsilon;
  const long double h = fd_step;

  long double worst = 0.0L;
  long double scale = 0.0L;
  for (int i = 0; i < n_samples; ++i) {
    const long double s = s_lo + (s_hi - s_lo) * i / (n_samples - 1);
    const long double y0 = R(s);
    const long double yp = R(s + h);
    const long double ym = R(s - h);
    const long double d1 = (yp - ym) / (2.0L * h);
    const long double d2 = (yp - 2.0L * y0 + ym) / (h * h);
    const long double sigma = 2.0L * s * (1.0L - s);
    const long double tau_t = 1.0L - 3.0L * s;
    const long double sig_t = -delta * s * s + (gamma + delta - e2) * s - gamma;
    // Denominator-cleared form of the same equation: the singular 1/sigma^2
    // coefficient would otherwise amplify fd truncation near the endpoints.
    const long double res = sigma * sigma * d2 + sigma * tau_t * d1 + sig_t * y0;
    worst = std::max(worst, fabsl(res));
    scale = std::max(scale, fabsl(y0));
  }
  return static_cast<double>(worst / scale);
}

}  // namespace ptd
