#include "ptd/model.hpp"

#include <cmath>
#include <stdexcept>

namespace ptd {

void PhysicalParams::validate() const {
  const bool ok = std::isfinite(V0) && V0 > 0.0 && std::isfinite(alpha) && alpha > 0.0 &&
                  std::isfinite(mu) && mu > 0.0 && std::isfinite(hbar) && hbar > 0.0;
  if (!ok) throw std::invalid_argument("PhysicalParams: V0, alpha, mu, hbar must be finite and positive");
}

void StateLabel::validate() const {
  if (D < 1) throw std::invalid_argument("StateLabel: D must be >= 1");
  if (ell < 0) throw std::invalid_argument("StateLabel: ell must be >= 0");
  if (n_r < 0) throw std::invalid_argument("StateLabel: n_r must be >= 0");
}

ReducedParams reduce(const PhysicalParams& p, const StateLabel& st) {
  p.validate();
  st.validate();
  ReducedParams rp;
  const double k = st.k();
  rp.k = k;
  rp.beta = static_cast<double>(st.ell) * (st.ell + st.D - 2);
  rp.gamma = (k - 1.0) * (k - 3.0) / 4.0;  // equals beta + (D-1)(D-3)/4
  rp.delta = 2.0 * p.mu * p.V0 / (p.hbar * p.hbar * p.alpha * p.alpha);
  rp.v = (k - 1.0) / 2.0;
  rp.epsilon = 0.5 * (-2.0 * (2 * st.n_r + 1) - std::sqrt(1.0 + 4.0 * rp.gamma) +
                      std::sqrt(1.0 + 4.0 * rp.delta));
  return rp;
}

double binding_epsilon(const PhysicalParams& p, const StateLabel& st) {
  p.validate();
  st.validate();
  const double delta = 2.0 * p.mu * p.V0 / (p.hbar * p.hbar * p.alpha * p.alpha);
  return 0.5 * (-(4.0 * st.n_r + 2.0 * st.ell + st.D) + std::sqrt(1.0 + 4.0 * delta));
}

bool is_bound(const PhysicalParams& p, const StateLabel& st) {
  return binding_epsilon(p, st) > 0.0;  // threshold counts as unbound
}

double potential_value(const PhysicalParams& p, double r) {
  p.validate();
  if (!(r >= 0.0)) throw std::domain_error("potential_value: r must be >= 0");
  const double c = std::cosh(p.alpha * r);
  return -p.V0 / (c * c);
}

CentrifugalPair centrifugal_pair(const PhysicalParams& p, double r) {
  p.validate();
  if (!(r > 0.0)) throw std::domain_error("centrifugal_pair: r must be > 0");
  const double sh = std::sinh(p.alpha * r);
  return {1.0 / (r * r), p.alpha * p.alpha / (sh * sh)};
}

}  // namespace ptd
