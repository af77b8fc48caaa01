#pragma once

#include <cmath>

namespace cmaf {

// Everything in this module works in natural units r0 = 1. Callers that need a
// physical horizon radius rescale at the boundary (see scale_dimension in
// format.hpp). The double-null chart (s, sbar) covers the exterior s > 0 and a
// neighbourhood s in (-1, 0) of the horizon; the area radius r(s, sbar) is
// defined implicitly by
//     (r - 1) e^r = s e^(sbar + s + 1).

struct SchwarzschildParams {
  double r0 = 1.0;  // horizon area radius
  double m = 0.5;   // mass, always r0/2

  static SchwarzschildParams with_radius(double r0_) { return {r0_, 0.5 * r0_}; }
};

struct BackgroundPoint {
  double s;
  double sbar;
  double r;
  double omega_sq;  // conformal factor Omega^2
};

/// Closed-form background geometry at (s, sbar). The null shears, torsions and
/// the curvature components alpha, beta (and conjugates) and sigma vanish
/// identically for this chart; accessors return exact zeros.
struct BackgroundFields {
  double dr_dsbar = 0.0;
  double dr_ds = 0.0;
  double tr_chi_prime = 0.0;
  double tr_chibar = 0.0;
  double omega = 0.0;
  double omegabar = 0.0;
  double rho = 0.0;
  double mu = 0.0;
  double hawking_mass = 0.0;

  static constexpr double shear_chi_prime() { return 0.0; }
  static constexpr double shear_chibar() { return 0.0; }
  static constexpr double torsion_eta() { return 0.0; }
  static constexpr double torsion_etabar() { return 0.0; }
  static constexpr double curvature_alpha() { return 0.0; }
  static constexpr double curvature_alphabar() { return 0.0; }
  static constexpr double curvature_beta() { return 0.0; }
  static constexpr double curvature_betabar() { return 0.0; }
  static constexpr double curvature_sigma() { return 0.0; }
};

/// Solve the implicit radius relation for r(s, sbar).
///
/// Newton iteration on F(r) = (r-1)e^r - s e^(sbar+s+1) from the initial guess
/// r = 1 + max(s,0) + max(sbar,0), capped at 64 iterations, with a bisection
/// fallback on a bracketing interval. Throws DomainError for s <= -1 or when
/// no root exists in the chart, NonConvergence if both stages stall.
double solve_radius(double s, double sbar, double tol = 1e-13);

/// Omega^2 at (s, sbar).
double conformal_factor(double s, double sbar);

BackgroundPoint background_point(double s, double sbar);

BackgroundFields background_fields(double s, double sbar);

}  // namespace cmaf
