#pragma once

#include <functional>

#include "ptd/errors.hpp"

namespace ptd {

// Adaptive composite 16-point Gauss-Legendre on (a, b).  Panels are bisected
// until the local error estimate meets rel_tol or the panel's contribution is
// negligible (< 1e-12 of the running total), so integrable endpoint power
// singularities s^p, p > -1, are refined dyadically.  Endpoints are never
// evaluated.  Throws tolerance_not_met_error (carrying the best estimate)
// after 60 refinement levels.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10);

// Integral over (0, inf) via the rational map r = t/(1-t).
double integrate_half_line(const std::function<double(double)>& f, double rel_tol = 1e-10);

}  // namespace ptd
