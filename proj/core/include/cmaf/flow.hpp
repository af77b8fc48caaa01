#pragma once

#include <utility>
#include <vector>

#include "cmaf/linear_geometry.hpp"

namespace cmaf {

// Per-mode evolution of the linearised foliation along the null hypersurface.
// The flow parameter u is arc of area radius: r = 1 + u in natural units. The
// scalar state is the graph coefficient delta_f against Y_l; the lapse
// coefficient delta_a follows algebraically from (u, delta_f), and
// d(delta_f)/du = delta_a closes the system.

struct ModeState {
  double u = 0.0;
  double delta_f = 0.0;
  double delta_a = 0.0;
};

/// Linearised geometric coefficients at one flow state. Same profile
/// conventions as InitialLeafState; alpha, conjugate alpha and sigma vanish.
struct DerivedQuantities {
  double gslash = 0.0;
  double rbar = 0.0;
  double trchibar = 0.0;
  double chibarhat = 0.0;
  double trchiprime = 0.0;
  double chiprimehat = 0.0;
  double eta = 0.0;
  double omegabar = 0.0;
  double K = 0.0;
  double mu = 0.0;
  double betabar = 0.0;
  double rho = 0.0;
  double beta = 0.0;
};

/// Mode-l residuals of the linearised basic equations (the independent
/// cross-check route), dimensionless in natural units. All vanish on states
/// generated by the lapse algebra and closed forms.
struct ResidualVector {
  double res_trchibar_prop = 0.0;
  double res_trchiprime_prop = 0.0;
  double res_mu_prop = 0.0;
  double res_codazzi_chibar = 0.0;
  double res_codazzi_chiprime = 0.0;
  double res_eta_div = 0.0;
  double res_eta_curl = 0.0;
  double res_omegabar_elliptic = 0.0;
  double res_omegabar_mean = 0.0;
  double res_gauss = 0.0;

  double max_abs() const;
  std::vector<std::pair<const char*, double>> named() const;
};

/// Algebraic mode-l lapse solve at (u, delta_f); amp.uf feeds the source term.
double lapse_from_f(double u, double delta_f, int l, const ModeAmplitudes& amp);

/// Analytic d(delta_a)/du along the flow, evaluated at the given state
/// (uses the state's delta_a as d(delta_f)/du).
double lapse_derivative(double u, double delta_f, double delta_a, int l,
                        const ModeAmplitudes& amp);

/// Classical fixed-step fourth-order Runge-Kutta trajectory of
/// d(delta_f)/du = lapse(u, delta_f), returning n_steps + 1 states at uniform
/// steps (a single state when u_max = 0). Throws StepError when the step
/// exceeds the horizon radius, DomainError for negative u_max or n_steps < 1.
std::vector<ModeState> evolve_mode(int l, const ModeAmplitudes& amp, double u_max, int n_steps);
std::vector<ModeState> evolve_mode(PerturbationKind kind, int l, double u_max, int n_steps);

/// Exact solution of the flow ODE for the given mode data.
double closed_form_f(int l, const ModeAmplitudes& amp, double u);
double closed_form_f(PerturbationKind kind, int l, double u);

/// State carrying the exact delta_f and the algebraic lapse at u.
ModeState closed_form_state(int l, const ModeAmplitudes& amp, double u);
ModeState closed_form_state(PerturbationKind kind, int l, double u);

DerivedQuantities derived_quantities(int l, const ModeAmplitudes& amp, const ModeState& state);
DerivedQuantities derived_quantities(PerturbationKind kind, int l, const ModeState& state);

ResidualVector basic_equation_residuals(int l, const ModeAmplitudes& amp, const ModeState& state);
ResidualVector basic_equation_residuals(PerturbationKind kind, int l, const ModeState& state);

/// Gauss-curvature perturbation by the metric-variation route and by the
/// linearised Gauss equation; callers assert their agreement.
std::pair<double, double> gauss_delta_two_ways(int l, const ModeAmplitudes& amp,
                                               const ModeState& state);
std::pair<double, double> gauss_delta_two_ways(PerturbationKind kind, int l,
                                               const ModeState& state);

}  // namespace cmaf
