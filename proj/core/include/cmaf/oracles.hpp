#pragma once

#include <array>
#include <functional>

namespace cmaf {
namespace oracles {

// Independent numerical routes used to check the closed-form implementations.
// Nothing here shares code with the primary paths.

/// Radius from the implicit chart relation by pure bisection on the monotone
/// relation function. r0 = 1 units.
double bisection_radius(double s, double sbar, double tol = 1e-14);

/// Composite Simpson rule on [a, b].
double simpson(const std::function<double(double)>& f, double a, double b, int intervals);

using AngularFn = std::function<double(double, double)>;  // f(theta, phi)

/// Fourth-order finite-difference partial  d^a/dtheta^a d^b/dphi^b f,
/// a + b <= 3.
double fd_partial(const AngularFn& f, double theta, double phi, int a, int b, double h = 5e-3);

/// Laplace-Beltrami of f on the unit round sphere by finite differences.
double fd_laplacian(const AngularFn& f, double theta, double phi, double h = 5e-3);

/// Gradient covector (d_theta f, d_phi f).
std::array<double, 2> fd_gradient(const AngularFn& f, double theta, double phi, double h = 5e-3);

/// Divergence covector of the trace-free covariant Hessian of f, computed from
/// finite-difference partials and the round-sphere connection.
std::array<double, 2> fd_div_tracefree_hessian(const AngularFn& f, double theta, double phi,
                                               double h = 5e-3);

}  // namespace oracles
}  // namespace cmaf
