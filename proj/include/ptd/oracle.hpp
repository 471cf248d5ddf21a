#pragma once

#include "ptd/model.hpp"

namespace ptd {

// Which centrifugal kernel the reference solver integrates: the exact 1/r^2
// hyperradial barrier or the sinh-substituted kernel the closed forms solve.
enum class CentrifugalMode { exact, approx };

struct RadialGrid {
  double r_min;
  double r_max;
  int n;  // >= 16 points, uniform step

  double step() const { return (r_max - r_min) / (n - 1); }
};

// Direct two-sided Numerov discretization of one (D, ell) channel.  Knows the
// problem statement only; never consults the closed-form spectrum.
struct RadialODE {
  CentrifugalMode mode = CentrifugalMode::approx;
  PhysicalParams params;
  int D = 3;
  int ell = 0;
  RadialGrid grid{};

  // r_min = 1e-5/alpha, r_max = 30/alpha, 40000 points.  find_eigenvalue
  // widens r_max on its own when a found state's tail is still live at the
  // boundary.
  static RadialODE with_default_grid(CentrifugalMode mode, const PhysicalParams& p, int D,
                                     int ell);

  double effective_potential(double r) const;
};

struct SweepResult {
  int node_count;    // sign changes of the outward solution over the full grid;
                     // jumps from n_r to n_r + 1 as E crosses the n_r-th level
  double mismatch;   // normalized Wronskian defect at the match point
  int match_index;
};

// One outward + inward Numerov pass at trial energy E < 0, matched at the
// outermost classical turning point.
SweepResult integrate_numerov(const RadialODE& ode, double E);

struct EigenResult {
  double energy;
  int node_count;
  double boundary_mismatch;
};

// n_r-th eigenvalue (by interior node count) of the discretized channel:
// coarse energy scan, bisection on the mismatch sign, secant polish to
// |dE| < 1e-12 relative.  Throws eigenvalue_not_found_error (carrying the
// maximum node count seen) when fewer than n_r + 1 states lie below threshold.
EigenResult find_eigenvalue(const RadialODE& ode, int n_r);

}  // namespace ptd
