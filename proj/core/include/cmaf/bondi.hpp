#pragma once

#include <array>

#include "cmaf/linear_geometry.hpp"
#include "cmaf/sphere.hpp"

namespace cmaf {

// Linearised energy-momentum vector at null infinity for initial-leaf
// perturbations spanned by degree-0 and degree-1 harmonics (the perturbations
// that keep the limit geometry round). Natural units r0 = 1.

/// delta_uf = c0 + (c1 Y1 + c2 Y2 + c3 Y3) for case i, or the mirrored
/// delta_f(u=0) assignment for case ii. The Y^i are the fixed basis
/// sin(theta)cos(phi), sin(theta)sin(phi), cos(theta); the c_i are
/// dimensionless, c0 is a length.
struct KernelPerturbation {
  PerturbationKind kind = PerturbationKind::case_i;
  double c0 = 0.0;
  std::array<double, 3> c{0.0, 0.0, 0.0};
};

struct EnergyMomentumDelta {
  double dE = 0.0;
  std::array<double, 3> dP{0.0, 0.0, 0.0};
  double dMB = 0.0;
  double dN_coeff = 0.0;  // coefficient of the limit-N perturbation against Y_{l=1}
};

/// Coefficient of the limit function-N perturbation against Y_l for the unit
/// mode perturbation (case i: [-lambda(lambda+2) + lambda(lambda-1)e^{3/lambda}],
/// case ii: -3 e^{3/lambda}; zero at l = 0).
double delta_N_coeff(PerturbationKind kind, int l);

/// Bondi-energy perturbation by quadrature of the two-term integrand
/// (limit-N perturbation plus background N times the volume-element
/// perturbation); vanishes for every kernel perturbation but is returned as
/// computed. Requires a grid resolving degree 1.
double delta_energy(const KernelPerturbation& p, const SphereGridPtr& grid);

/// Linear-momentum perturbation by quadrature against the first-harmonics
/// basis. The reference-frame function perturbations are eliminated
/// analytically (their contribution integrates to zero), so only the
/// Y^i * delta_N quadrature remains; requires a grid resolving degree 2.
std::array<double, 3> delta_momentum(const KernelPerturbation& p, const SphereGridPtr& grid);

/// Bondi-mass linearisation at the Schwarzschild background
/// (E = m_B = 1/2, momentum zero): dMB = dE. Backgrounds with nonzero
/// momentum are rejected.
double bondi_mass_linearization(double dE, const std::array<double, 3>& dP,
                                double background_momentum_norm = 0.0);

double delta_bondi_mass(const KernelPerturbation& p, const SphereGridPtr& grid);

EnergyMomentumDelta energy_momentum_delta(const KernelPerturbation& p, const SphereGridPtr& grid);

/// Response matrix M[i][j] = dP_i for the unit c_j perturbation, the c0
/// response column, and the ranks of the 3x3 and augmented 3x4 maps.
struct MomentumResponse {
  std::array<std::array<double, 3>, 3> matrix{};
  std::array<double, 3> c0_column{0.0, 0.0, 0.0};
  int rank = 0;
  int augmented_rank = 0;
};
MomentumResponse momentum_surjectivity_check(const SphereGridPtr& grid,
                                             PerturbationKind kind = PerturbationKind::case_i);

/// Samples of the limit-N perturbation on a grid (used by the CLI grid export).
GridField delta_N_field(const KernelPerturbation& p, const SphereGridPtr& grid);

}  // namespace cmaf
