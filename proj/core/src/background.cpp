#include "cmaf/background.hpp"

#include <algorithm>
#include <cmath>

#include "cmaf/errors.hpp"

namespace cmaf {

namespace {

// F(r) = (r-1)e^r - s e^(sbar+s+1), strictly increasing in r for r > 0.
double radius_relation(double r, double s, double sbar) {
  return (r - 1.0) * std::exp(r) - s * std::exp(sbar + s + 1.0);
}

double radius_relation_deriv(double r) { return r * std::exp(r); }

bool relation_converged(double r, double s, double sbar, double tol) {
  const double lhs = (r - 1.0) * std::exp(r);
  const double rhs = s * std::exp(sbar + s + 1.0);
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
  // evaluating the relation itself costs a few ulp, so the residual cannot be
  // driven below that floor
  return std::abs(lhs - rhs) <= std::max(tol, 8e-16) * scale;
}

}  // namespace

double solve_radius(double s, double sbar, double tol) {
  if (!(s > -1.0)) throw DomainError("solve_radius: require s > -r0");
  if (tol <= 0.0) throw DomainError("solve_radius: tol must be positive");
  if (s == 0.0) return 1.0;

  // Bracket. For s > 0 the root lies in (1, 1 + s + |sbar| + 10); for s < 0 it
  // lies in (0, 1) provided the right-hand side stays above F(0+) = -1.
  double lo, hi;
  if (s > 0.0) {
    lo = 1.0 - 1e-9;
    hi = 1.0 + s + std::abs(sbar) + 10.0;
  } else {
    if (s * std::exp(sbar + s + 1.0) <= -1.0)
      throw DomainError("solve_radius: point outside the chart (no root with r > 0)");
    lo = 1e-12;
    hi = 1.0;
  }

  double r = 1.0 + std::max(s, 0.0) + std::max(sbar, 0.0);
  r = std::clamp(r, lo, hi);
  for (int it = 0; it < 64; ++it) {
    const double f = radius_relation(r, s, sbar);
    const double step = f / radius_relation_deriv(r);
    const double next = r - step;
    if (!(next > lo && next < hi)) break;  // stalled, fall back to bisection
    r = next;
    if (std::abs(step) <= 4e-16 * r) return r;  // at the roundoff limit
    if (relation_converged(r, s, sbar, tol)) return r;
  }
  if (relation_converged(r, s, sbar, tol)) return r;

  // F(lo) < 0 <= F(hi) on both branches, so plain bisection is safe
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (radius_relation(mid, s, sbar) < 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 0.5 * tol * std::max(lo, 1.0)) break;
  }
  r = 0.5 * (lo + hi);
  // one Newton polish step from the bisection estimate
  r -= radius_relation(r, s, sbar) / radius_relation_deriv(r);
  if (!relation_converged(r, s, sbar, tol))
    throw NonConvergence("solve_radius: iteration cap exceeded");
  return r;
}

double conformal_factor(double s, double sbar) {
  const double r = solve_radius(s, sbar);
  return (s + 1.0) / r * std::exp(sbar + s + 1.0 - r);
}

BackgroundPoint background_point(double s, double sbar) {
  const double r = solve_radius(s, sbar);
  return {s, sbar, r, (s + 1.0) / r * std::exp(sbar + s + 1.0 - r)};
}

BackgroundFields background_fields(double s, double sbar) {
  const double r = solve_radius(s, sbar);
  // (r-1)/s in its exponential form; regular at s = 0 and exactly 1 on sbar = 0.
  const double horizon_factor = std::exp(sbar + s + 1.0 - r);

  BackgroundFields f;
  f.dr_dsbar = (r - 1.0) / r;
  f.dr_ds = (s + 1.0) / r * horizon_factor;
  f.tr_chi_prime = 2.0 * s / (r * (s + 1.0));
  f.tr_chibar = 2.0 * (s + 1.0) / (r * r) * horizon_factor;
  f.omega = 0.5 / (r * r);
  f.omegabar = 0.5 / (s + 1.0) + 0.5 -
               (0.5 / r + 0.5) * (s + 1.0) / r * horizon_factor;
  f.rho = -1.0 / (r * r * r);
  f.mu = 1.0 / (r * r * r);
  // m_H = (r/2)(1 - (1/16pi) * 4pi r^2 trchi' trchibar)
  f.hawking_mass = 0.5 * r * (1.0 - 0.25 * r * r * f.tr_chi_prime * f.tr_chibar);
  return f;
}

}  // namespace cmaf
