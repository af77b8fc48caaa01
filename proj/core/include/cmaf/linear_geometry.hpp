#pragma once

#include <vector>

namespace cmaf {

// Per-mode linearised perturbations of the spherically symmetric foliation,
// everything in natural units r0 = 1 and expressed as scalar coefficients
// against the four angular profiles Y_l, grad Y_l, Y_l * ground-metric and
// tracefree-Hessian Y_l.

enum class PerturbationKind {
  case_i,   // initial leaf moved inside the horizon: delta_f(0) = 0, delta_uf = Y_l
  case_ii,  // initial leaf moved along the null hypersurface: delta_f(0) = Y_l, delta_uf = 0
};

/// Mode-l data of a perturbation: delta_f(u=0) = f0 * Y_l and
/// delta_uf = uf * Y_l (lengths; the pure cases carry amplitude one in
/// r0 = 1 units).
struct ModeAmplitudes {
  double f0 = 0.0;
  double uf = 0.0;
};

ModeAmplitudes pure_amplitudes(PerturbationKind kind, double amplitude = 1.0);

struct MixedComponent {
  int l = 0;
  double amp_case_i = 0.0;   // multiplies the case-i unit perturbation at degree l
  double amp_case_ii = 0.0;  // multiplies the case-ii unit perturbation at degree l
};

/// A pure case at one degree or an arbitrary linear span of both cases over
/// several degrees.
struct PerturbationCase {
  enum class Kind { case_i, case_ii, mixed };
  Kind kind = Kind::case_i;
  std::vector<MixedComponent> components;  // only for Kind::mixed

  static PerturbationCase pure(PerturbationKind k);
  static PerturbationCase mixed(std::vector<MixedComponent> parts);

  /// Combined (f0, uf) amplitudes at degree l.
  ModeAmplitudes amplitudes_at(int l) const;
};

/// Linearised data on the initial leaf (u = 0, horizon radius), coefficients
/// against the angular profiles listed per field. alpha, conjugate alpha and
/// sigma perturbations vanish identically and are not stored.
struct InitialLeafState {
  double a0 = 0.0;            // lapse, against Y_l
  double gslash0 = 0.0;       // metric coefficient, against Y_l * ground metric
  double rbar0 = 0.0;         // area radius (scalar)
  double trchibar0 = 0.0;     // incoming expansion, against Y_l
  double chibarhat0 = 0.0;    // incoming shear, against tracefree-Hessian Y_l
  double trchiprime0 = 0.0;   // outgoing expansion, against Y_l
  double chiprimehat0 = 0.0;  // outgoing shear, against tracefree-Hessian Y_l
  double eta0 = 0.0;          // torsion, against grad Y_l
  double omegabar0 = 0.0;     // acceleration, against Y_l
  double K0 = 0.0;            // Gauss curvature, against Y_l
  double mu0 = 0.0;           // mass aspect, against Y_l
  double betabar0 = 0.0;      // curvature component, against grad Y_l
  double rho0 = 0.0;          // curvature scalar, against Y_l
  double beta0 = 0.0;         // curvature component, against grad Y_l
};

/// Unique mode-l solution of the initial-leaf lapse equation:
/// case i gives -1 at l = 0 and 0 for l >= 1; case ii gives 0 at l = 0 and
/// (3 + lambda_l)/lambda_l for l >= 1.
double initial_lapse(PerturbationKind kind, int l);
double initial_lapse(int l, const ModeAmplitudes& amp);

InitialLeafState initial_leaf_state(PerturbationKind kind, int l);
InitialLeafState initial_leaf_state(int l, const ModeAmplitudes& amp);
InitialLeafState initial_leaf_state(const PerturbationCase& pc, int l);

/// Linearised geometry of the null hypersurface and its leaf at parameter s
/// (incoming coordinate zero, r = 1 + s), with delta_f and delta_uf frozen at
/// the supplied mode amplitudes. Dotted quantities live on the null
/// hypersurface, double-dotted ones on the spacelike leaf. The underlying
/// graph perturbation delta_hbar equals uf at every s.
struct LinearizedHypersurfaceGeometry {
  double shift = 0.0;            // delta of the shift vector, against (inverse metric) grad Y_l
  double epsbar_vec = 0.0;       // incoming null direction correction, same profile
  double epsprime_vec = 0.0;     // outgoing correction on the leaf, same profile
  double trchibar_dot = 0.0;     // against Y_l
  double chibarhat_dot = 0.0;    // against tracefree-Hessian Y_l
  double eta_dot = 0.0;          // against grad Y_l
  double omegabar_dot = 0.0;     // against Y_l
  double betabar_dot = 0.0;      // against grad Y_l
  double rho_dot = 0.0;          // against Y_l
  double trchiprime_ddot = 0.0;  // leaf-level outgoing expansion, against Y_l
  double eta_ddot = 0.0;         // leaf-level torsion, against grad Y_l
  double beta_ddot = 0.0;        // leaf-level curvature component, against grad Y_l
  // alpha, conjugate alpha, sigma and outgoing-beta perturbations on the null
  // hypersurface vanish identically.
};

LinearizedHypersurfaceGeometry linearized_hypersurface_coeffs(double s, PerturbationKind kind, int l);
LinearizedHypersurfaceGeometry linearized_hypersurface_coeffs(double s, int l,
                                                              const ModeAmplitudes& amp);

/// Gauss-curvature perturbation on the initial leaf by both routes: the
/// metric-variation formula and the linearised Gauss equation. They agree for
/// every case and degree.
struct InitialGaussCurvatureDelta {
  double from_metric = 0.0;
  double from_gauss_equation = 0.0;
};
InitialGaussCurvatureDelta initial_gauss_two_ways(int l, const ModeAmplitudes& amp);

}  // namespace cmaf
