#include "ptd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ptd/errors.hpp"

namespace ptd {

RadialODE RadialODE::with_default_grid(CentrifugalMode mode, const PhysicalParams& p, int D,
                                       int ell) {
  p.validate();
  if (D < 1 || ell < 0) throw std::invalid_argument("RadialODE: require D >= 1, ell >= 0");
  RadialODE ode;
  ode.mode = mode;
  ode.params = p;
  ode.D = D;
  ode.ell = ell;
  ode.grid = {1e-5 / p.alpha, 30.0 / p.alpha, 40000};
  return ode;
}

double RadialODE::effective_potential(double r) const {
  if (!(r > 0.0)) throw std::domain_error("effective_potential: r must be > 0");
  const int k = D + 2 * ell;
  const double gamma = (k - 1.0) * (k - 3.0) / 4.0;
  const double ch = std::cosh(params.alpha * r);
  double barrier;
  if (mode == CentrifugalMode::exact) {
    barrier = gamma / (r * r);
  } else {
    const double sh = std::sinh(params.alpha * r);
    barrier = gamma * params.alpha * params.alpha / (sh * sh);
  }
  return -params.V0 / (ch * ch) + params.hbar * params.hbar / (2.0 * params.mu) * barrier;
}

namespace {

constexpr double kRescaleAt = 1e150;
constexpr int kMaxPoints = 300000;

struct Sweep {
  int nodes_match = 0;  // outward sign changes up to the match point
  int nodes_full = 0;   // outward sign changes over the whole grid
  double mismatch = 0.0;
  int match_index = 0;
};

// One (mode, channel, grid) discretization.  y'' = f y with
// f(r) = W(r) - scale2 * E and W = scale2 * V_eff precomputed once.
struct Channel {
  double r_min = 0.0, h = 0.0;
  int n = 0;
  double scale2 = 0.0;   // 2 mu / hbar^2
  double rho = 0.0;      // regular indicial exponent (k-1)/2
  double w0_base = 0.0;  // near-origin f(r) ~ gamma/r^2 + (w0_base - scale2 E) + w2 r^2
  double w2 = 0.0;
  std::vector<double> W;

  Channel(const RadialODE& ode, const RadialGrid& g) {
    const PhysicalParams& p = ode.params;
    const int k = ode.D + 2 * ode.ell;
    const double gamma = (k - 1.0) * (k - 3.0) / 4.0;
    const double a2 = p.alpha * p.alpha;
    r_min = g.r_min;
    h = g.step();
    n = g.n;
    scale2 = 2.0 * p.mu / (p.hbar * p.hbar);
    rho = (k - 1.0) / 2.0;
    w0_base = -scale2 * p.V0;
    w2 = scale2 * p.V0 * a2;
    if (ode.mode == CentrifugalMode::approx) {
      w0_base -= gamma * a2 / 3.0;
      w2 += gamma * a2 * a2 / 15.0;
    }
    W.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) W[i] = scale2 * ode.effective_potential(r_min + i * h);
  }

  double r_at(int i) const { return r_min + i * h; }

  // Regular-branch series r^rho (1 + c2 r^2 + c4 r^4), used to anchor the
  // outward recurrence at r ~ 10 h where the centrifugal term no longer
  // dominates a single Numerov step.
  double series(double r, double E) const {
    const double w0 = w0_base - scale2 * E;
    const double c2 = w0 / (4.0 * rho + 2.0);
    const double c4 = (w0 * c2 + w2) / (8.0 * rho + 12.0);
    const double r2 = r * r;
    return std::pow(r, rho) * (1.0 + r2 * (c2 + r2 * c4));
  }

  Sweep run(double E) const;
};

Sweep Channel::run(double E) const {
  const double f_shift = scale2 * E;
  const double h2_12 = h * h / 12.0;
  std::vector<double> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) a[i] = 1.0 - h2_12 * (W[i] - f_shift);

  // Matching region: outermost classically allowed index, then the strongest
  // antinode of the outward solution nearby (keeps the log-derivative away
  // from nodes).
  int m0 = n / 2;
  for (int i = n - 4; i >= 2; --i)
    if (W[i] - f_shift < 0.0) {
      m0 = i;
      break;
    }
  m0 = std::clamp(m0, 2, n - 4);
  const int win_lo = std::max(2, m0 - 10);
  const int win_hi = std::min(n - 4, m0 + 10);

  // Outward pass.  Seeded inside the power-law zone; up to there the regular
  // branch has no sign change.
  int i0 = std::min(static_cast<int>(std::ceil((10.0 * h - r_min) / h)), win_lo - 1);
  i0 = std::max(i0, 0);
  std::vector<double> out(static_cast<std::size_t>(win_hi + 2 - (win_lo - 1)));
  std::vector<int> nodes_at(out.size());
  auto capture = [&](int i, double y, int nodes) {
    if (i >= win_lo - 1 && i <= win_hi + 1) {
      out[static_cast<std::size_t>(i - (win_lo - 1))] = y;
      nodes_at[static_cast<std::size_t>(i - (win_lo - 1))] = nodes;
    }
  };

  double y0 = series(r_at(i0), E);
  double y1 = series(r_at(i0 + 1), E);
  int nodes = 0;
  int last_sign = y0 > 0.0 ? 1 : (y0 < 0.0 ? -1 : 0);
  auto feed_sign = [&nodes, &last_sign](double y) {
    const int s = y > 0.0 ? 1 : (y < 0.0 ? -1 : 0);
    if (s != 0) {
      if (last_sign != 0 && s != last_sign) ++nodes;
      last_sign = s;
    }
  };
  feed_sign(y1);
  capture(i0, y0, 0);
  capture(i0 + 1, y1, nodes);

  for (int i = i0 + 1; i + 1 < n; ++i) {
    double y2 = ((12.0 - 10.0 * a[i]) * y1 - a[i - 1] * y0) / a[i + 1];
    if (std::abs(y2) > kRescaleAt) {
      // Rescaling the pair and the captured window together keeps every later
      // ratio consistent.
      const double s = 1.0 / std::abs(y2);
      y1 *= s;
      y2 *= s;
      for (double& v : out) v *= s;
    }
    feed_sign(y2);
    capture(i + 1, y2, nodes);
    y0 = y1;
    y1 = y2;
  }
  const int nodes_full = nodes;

  int match = win_lo;
  for (int i = win_lo; i <= win_hi; ++i)
    if (std::abs(out[static_cast<std::size_t>(i - (win_lo - 1))]) >
        std::abs(out[static_cast<std::size_t>(match - (win_lo - 1))]))
      match = i;
  auto out_at = [&](int i) { return out[static_cast<std::size_t>(i - (win_lo - 1))]; };

  // Inward pass from the exponential tail, kept only around the match point.
  const double kappa = std::sqrt(std::max(-f_shift, 0.0));
  double z2 = 1.0;
  double z1 = std::exp(kappa * h);
  double in_m1 = 0.0, in_0 = 0.0, in_p1 = 0.0;
  auto capture_in = [&](int i, double z) {
    if (i == match - 1) in_m1 = z;
    if (i == match) in_0 = z;
    if (i == match + 1) in_p1 = z;
  };
  capture_in(n - 1, z2);
  capture_in(n - 2, z1);
  for (int i = n - 2; i - 1 >= match - 1; --i) {
    double z0 = ((12.0 - 10.0 * a[i]) * z1 - a[i + 1] * z2) / a[i - 1];
    if (std::abs(z0) > kRescaleAt) {
      const double s = 1.0 / std::abs(z0);
      z0 *= s;
      z1 *= s;
      in_m1 *= s;
      in_0 *= s;
      in_p1 *= s;
    }
    capture_in(i - 1, z0);
    z2 = z1;
    z1 = z0;
  }

  double yl = out_at(match);
  double zl = in_0;
  if (yl == 0.0) yl = 1e-300;
  if (zl == 0.0) zl = 1e-300;
  const double dl = (out_at(match + 1) - out_at(match - 1)) / (2.0 * h);
  const double dr = (in_p1 - in_m1) / (2.0 * h);

  Sweep s;
  s.nodes_match = nodes_at[static_cast<std::size_t>(match - (win_lo - 1))];
  s.nodes_full = nodes_full;
  s.mismatch = dl / yl - dr / zl;
  s.match_index = match;
  return s;
}

}  // namespace

SweepResult integrate_numerov(const RadialODE& ode, double E) {
  if (!(E < 0.0)) throw std::domain_error("integrate_numerov: need E < 0 for a decaying tail");
  if (ode.grid.n < 16) throw std::invalid_argument("integrate_numerov: grid too small");
  Channel ch(ode, ode.grid);
  const Sweep s = ch.run(E);
  return {s.nodes_full, s.mismatch, s.match_index};
}

EigenResult find_eigenvalue(const RadialODE& ode, int n_r) {
  if (n_r < 0) throw std::invalid_argument("find_eigenvalue: n_r must be >= 0");
  if (ode.grid.n < 16) throw std::invalid_argument("find_eigenvalue: grid too small");
  ode.params.validate();

  const double V0 = ode.params.V0;
  const int k = ode.D + 2 * ode.ell;
  const double gamma = (k - 1.0) * (k - 3.0) / 4.0;
  const double tol = 1e-12 * std::max(1.0, V0);

  RadialGrid grid = ode.grid;
  int regrids = 0;
  int max_nodes_seen = 0;

  while (true) {
    Channel ch(ode, grid);
    const double e_ceil = -1e-8 * V0;

    int count_hi = ch.run(e_ceil).nodes_full;
    max_nodes_seen = std::max(max_nodes_seen, count_hi);
    if (count_hi < n_r + 1) {
      // A state close to threshold decays too slowly for this box; widen once
      // before concluding the well is short of states.
      if (regrids < 3) {
        ++regrids;
        grid.r_max = grid.r_min + 5.0 * (grid.r_max - grid.r_min);
        grid.n = std::min(kMaxPoints, 5 * (grid.n - 1) + 1);
        continue;
      }
      throw eigenvalue_not_found_error("find_eigenvalue: fewer bound states than requested n_r",
                                       max_nodes_seen);
    }

    double lo = gamma < 0.0 ? -1.5 * V0 : -(1.0 + 1e-6) * V0;
    for (int widen = 0; widen < 8 && ch.run(lo).nodes_full > n_r; ++widen) lo *= 2.0;
    double hi = e_ceil;

    for (int iter = 0; iter < 120 && hi - lo > tol; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (ch.run(mid).nodes_full <= n_r)
        lo = mid;
      else
        hi = mid;
    }

    // Secant polish on the log-derivative defect inside the node bracket.
    double e_best = 0.5 * (lo + hi);
    double wa = ch.run(lo).mismatch;
    double wb = ch.run(hi).mismatch;
    if (std::isfinite(wa) && std::isfinite(wb) && wa != wb && (wa < 0.0) != (wb < 0.0)) {
      double ea = lo, eb = hi;
      for (int iter = 0; iter < 40; ++iter) {
        double en = eb - wb * (eb - ea) / (wb - wa);
        if (!std::isfinite(en) || en <= lo || en >= hi) en = 0.5 * (ea + eb);
        const double wn = ch.run(en).mismatch;
        if ((wn < 0.0) == (wa < 0.0)) {
          ea = en;
          wa = wn;
        } else {
          eb = en;
          wb = wn;
        }
        if (std::abs(eb - ea) < tol || wn == 0.0) break;
      }
      e_best = 0.5 * (ea + eb);
    }

    const Sweep fin = ch.run(e_best);
    max_nodes_seen = std::max(max_nodes_seen, fin.nodes_full);

    // The matched tail must be dead at the wall; if not, push the wall out to
    // ~30 decay lengths past the turning point and search again.
    const double kappa = std::sqrt(2.0 * ode.params.mu * (-e_best)) / ode.params.hbar;
    const double r_turn = ch.r_at(fin.match_index);
    if (kappa * (grid.r_max - r_turn) < 25.0 && regrids < 3) {
      ++regrids;
      const double h = grid.step();
      grid.r_max = r_turn + 30.0 / kappa;
      grid.n = std::min(kMaxPoints,
                        static_cast<int>(std::ceil((grid.r_max - grid.r_min) / h)) + 1);
      continue;
    }

    return {e_best, fin.nodes_match, fin.mismatch};
  }
}

}  // namespace ptd
