#pragma once

#include "ptd/model.hpp"
#include "ptd/wavefunction.hpp"

namespace ptd {

// Hellmann-Feynman value alpha^2 B / (2 ell + D - 2) with B the binding
// bracket; equals <alpha^2/sinh^2(alpha r)> exactly and approximates <r^-2>
// to O(alpha^2).  Throws inapplicable_error when 2 ell + D - 2 <= 0
// (D = 1 and D = 2 at ell = 0).
double inv_r2_hft(const PhysicalParams& p, const StateLabel& st);

// <V> = -V0 B / sqrt(1 + 8 mu V0 / (hbar alpha)^2); always in (-V0, 0).
double potential_hft(const PhysicalParams& p, const StateLabel& st);

// E - <V>; the kinetic-plus-centrifugal share of the level.
double kinetic_hft(const PhysicalParams& p, const StateLabel& st);

enum class Observable { inv_r2, sinh_centrifugal, potential, kinetic };

// Direct quadrature of the observable in the normalized corrected-mode state.
// inv_r2, sinh_centrifugal, and kinetic diverge at the origin for
// k = D + 2 ell <= 2 and throw divergent_integral_error there.
double expectation_quadrature(const PhysicalParams& p, const StateLabel& st, Observable obs,
                              double rel_tol = 1e-9);

// Central-difference dE/dV0 with the given relative step; equals <V>/V0 by
// the Hellmann-Feynman theorem.
double dE_dV0_fd(const PhysicalParams& p, const StateLabel& st, double rel_step = 1e-6);

struct ExpectationReport {
  StateLabel state;
  double energy;
  double inv_r2;        // HFT value; NaN when inapplicable
  double inv_r2_quad;   // quadrature <r^-2>; NaN when divergent
  double potential;     // HFT <V>
  double potential_quad;
  double kinetic;       // E - <V>
};

ExpectationReport report(const PhysicalParams& p, const StateLabel& st);

}  // namespace ptd
