#include "ptd/spectrum.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ptd/errors.hpp"

namespace ptd {

EnergyLevel energy(const PhysicalParams& p, const StateLabel& st) {
  const double eps = binding_epsilon(p, st);
  if (!(eps > 0.0))
    throw no_bound_state_error("energy: level is not bound at this alpha", 2.0 * eps);
  const double ha = p.hbar * p.alpha;
  return {st, -ha * ha / (2.0 * p.mu) * eps * eps, eps};
}

double energy_principal(const PhysicalParams& p, int n, int D) {
  if (n < 0) throw std::invalid_argument("energy_principal: n must be >= 0");
  // Every (n_r, ell) with 2 n_r + ell = n gives the same level; use ell = n % 2.
  return energy(p, StateLabel{D, n % 2, (n - n % 2) / 2}).energy;
}

double critical_alpha(const PhysicalParams& p, int n, int D) {
  p.validate();
  if (n < 0) throw std::invalid_argument("critical_alpha: n must be >= 0");
  if (D < 1) throw std::invalid_argument("critical_alpha: D must be >= 1");
  const double q = static_cast<double>(2 * n + D);
  if (q * q == 1.0)
    throw inapplicable_error("critical_alpha: the n = 0, D = 1 level is bound for every alpha");
  return std::sqrt(8.0 * p.mu * p.V0 / (p.hbar * p.hbar * (q * q - 1.0)));
}

int count_bound_states(const PhysicalParams& p, int D, int ell) {
  p.validate();
  if (D < 1 || ell < 0) throw std::invalid_argument("count_bound_states: require D >= 1, ell >= 0");
  const double root = std::sqrt(1.0 + 8.0 * p.mu * p.V0 / (p.hbar * p.hbar * p.alpha * p.alpha));
  // Bound iff 4 n_r + 2 ell + D < root, so n_r < (root - 2 ell - D)/4.
  const double limit = (root - 2.0 * ell - D) / 4.0;
  if (limit <= 0.0) return 0;
  const double ceil_limit = std::ceil(limit);
  // Exact threshold (limit integral) is unbound and must not be counted.
  return static_cast<int>(ceil_limit == limit ? limit : ceil_limit);
}

std::vector<EnergyTableRow> figure1_data(const PhysicalParams& p, std::span<const int> Ds,
                                         std::span<const int> ns,
                                         std::span<const double> alphas) {
  std::vector<EnergyTableRow> rows;
  rows.reserve(Ds.size() * ns.size() * alphas.size());
  for (int D : Ds)
    for (int n : ns)
      for (double alpha : alphas) {
        PhysicalParams q = p;
        q.alpha = alpha;
        EnergyTableRow row{D, n, alpha, std::numeric_limits<double>::quiet_NaN(), false};
        try {
          row.energy = energy_principal(q, n, D);
          row.bound = true;
        } catch (const no_bound_state_error&) {
        }
        rows.push_back(row);
      }
  return rows;
}

}  // namespace ptd
