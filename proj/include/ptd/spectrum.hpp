#pragma once

#include <span>
#include <vector>

#include "ptd/model.hpp"

namespace ptd {

struct EnergyLevel {
  StateLabel state;
  double energy;
  double epsilon;  // binding_epsilon, > 0
};

// Closed-form level of the sinh-substituted channel,
// E = -(hbar alpha)^2/(8 mu) [ -(4 n_r + 2 ell + D) + sqrt(1 + 8 mu V0/(hbar alpha)^2) ]^2.
// Throws no_bound_state_error (carrying the bracket) when the bracket <= 0;
// threshold states count as unbound.
EnergyLevel energy(const PhysicalParams& p, const StateLabel& st);

// Same level addressed by the principal number n = 2 n_r + ell; all (n_r, ell)
// splittings of a given n are exactly degenerate.
double energy_principal(const PhysicalParams& p, int n, int D);

// Largest alpha keeping level n bound at fixed (V0, mu, hbar):
// alpha_c = sqrt(8 mu V0 / (hbar^2 [(2n+D)^2 - 1])).  p.alpha is ignored.
// Throws inapplicable_error when (2n+D)^2 == 1 (n = 0, D = 1: never unbinds).
double critical_alpha(const PhysicalParams& p, int n, int D);

// Number of n_r >= 0 with 4 n_r + 2 ell + D < sqrt(1 + 8 mu V0/(hbar alpha)^2).
int count_bound_states(const PhysicalParams& p, int D, int ell);

struct EnergyTableRow {
  int D;
  int n;
  double alpha;
  double energy;  // NaN when unbound
  bool bound;
};

// Principal-indexed energy table over (D, n, alpha), ordered by D, then n,
// then alpha; unbound cells carry bound = false and NaN energy.  p.alpha is
// replaced by each grid value.
std::vector<EnergyTableRow> figure1_data(const PhysicalParams& p, std::span<const int> Ds,
                                         std::span<const int> ns,
                                         std::span<const double> alphas);

}  // namespace ptd
