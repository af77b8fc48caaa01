#include "cmaf/bondi.hpp"

#include <cmath>
#include <numbers>

#include "cmaf/asymptotics.hpp"
#include "cmaf/errors.hpp"

namespace cmaf {

namespace {

constexpr double kBackgroundN = 1.0;  // limit N of the round foliation, r0 = 1

// c1 Y1 + c2 Y2 + c3 Y3 sampled on the grid
GridField first_harmonic_combination(const std::array<double, 3>& c, const SphereGridPtr& grid) {
  const auto basis = first_harmonics_basis(grid);
  GridField out(grid);
  for (std::size_t k = 0; k < out.values.size(); ++k)
    out.values[k] = c[0] * basis[0].values[k] + c[1] * basis[1].values[k] +
                    c[2] * basis[2].values[k];
  return out;
}

}  // namespace

double delta_N_coeff(PerturbationKind kind, int l) {
  if (l < 0) throw DomainError("delta_N_coeff: degree must be nonnegative");
  if (l == 0) return 0.0;
  const double lam = eigenvalue(l);
  const double growth = std::exp(3.0 / lam);
  if (kind == PerturbationKind::case_i)
    return -lam * (lam + 2.0) + lam * (lam - 1.0) * growth;
  return -3.0 * growth;
}

GridField delta_N_field(const KernelPerturbation& p, const SphereGridPtr& grid) {
  if (!grid->resolves(1)) throw ResolutionError("delta_N_field: grid under-resolves degree 1");
  GridField out = first_harmonic_combination(p.c, grid);
  const double coeff = delta_N_coeff(p.kind, 1);
  for (double& v : out.values) v *= coeff;
  // the c0 (degree-zero) part of the perturbation does not change N
  return out;
}

double delta_energy(const KernelPerturbation& p, const SphereGridPtr& grid) {
  if (!grid->resolves(1)) throw ResolutionError("delta_energy: grid under-resolves degree 1");
  const GridField y = first_harmonic_combination(p.c, grid);
  const double n_coeff = delta_N_coeff(p.kind, 1);
  // volume-element perturbation factor: half the trace of the limit-metric
  // perturbation, i.e. the conformal coefficient itself
  const double dvol_coeff = limit_deltas(p.kind, 1).first;
  GridField integrand(grid);
  for (std::size_t k = 0; k < integrand.values.size(); ++k)
    integrand.values[k] =
        n_coeff * y.values[k] + kBackgroundN * dvol_coeff * y.values[k];
  return integrate(integrand) / (8.0 * std::numbers::pi);
}

std::array<double, 3> delta_momentum(const KernelPerturbation& p, const SphereGridPtr& grid) {
  if (!grid->resolves(2))
    throw ResolutionError("delta_momentum: need degree-2 resolution for Y^i products");
  const GridField dn = delta_N_field(p, grid);
  const auto basis = first_harmonics_basis(grid);
  std::array<double, 3> dP{0.0, 0.0, 0.0};
  for (int i = 0; i < 3; ++i)
    dP[i] = inner_product(basis[i], dn) / (8.0 * std::numbers::pi);
  return dP;
}

double bondi_mass_linearization(double dE, const std::array<double, 3>& dP,
                                double background_momentum_norm) {
  if (background_momentum_norm != 0.0)
    throw DomainError("bondi_mass_linearization: defined only at zero background momentum");
  // mass = sqrt(E^2 - |P|^2) linearised at E = m = 1/2, P = 0:
  // dMB = (E dE - P . dP) / m = dE, the dP term dropping out with P
  (void)dP;
  return dE;
}

double delta_bondi_mass(const KernelPerturbation& p, const SphereGridPtr& grid) {
  return bondi_mass_linearization(delta_energy(p, grid), delta_momentum(p, grid));
}

EnergyMomentumDelta energy_momentum_delta(const KernelPerturbation& p,
                                          const SphereGridPtr& grid) {
  EnergyMomentumDelta out;
  out.dE = delta_energy(p, grid);
  out.dP = delta_momentum(p, grid);
  out.dMB = bondi_mass_linearization(out.dE, out.dP);
  out.dN_coeff = delta_N_coeff(p.kind, 1);
  return out;
}

namespace {

int matrix_rank(std::array<std::array<double, 4>, 3> m, int cols, double tol) {
  int rank = 0;
  for (int col = 0; col < cols && rank < 3; ++col) {
    int pivot = -1;
    double best = tol;
    for (int row = rank; row < 3; ++row)
      if (std::abs(m[row][col]) > best) {
        best = std::abs(m[row][col]);
        pivot = row;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int row = rank + 1; row < 3; ++row) {
      const double factor = m[row][col] / m[rank][col];
      for (int k = col; k < cols; ++k) m[row][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

MomentumResponse momentum_surjectivity_check(const SphereGridPtr& grid, PerturbationKind kind) {
  MomentumResponse out;
  double scale = 0.0;
  for (int j = 0; j < 3; ++j) {
    KernelPerturbation p;
    p.kind = kind;
    p.c[j] = 1.0;
    const auto dP = delta_momentum(p, grid);
    for (int i = 0; i < 3; ++i) {
      out.matrix[i][j] = dP[i];
      scale = std::max(scale, std::abs(dP[i]));
    }
  }
  KernelPerturbation translation;
  translation.kind = kind;
  translation.c0 = 1.0;
  out.c0_column = delta_momentum(translation, grid);

  const double tol = 1e-10 * std::max(scale, 1.0);
  std::array<std::array<double, 4>, 3> full{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) full[i][j] = out.matrix[i][j];
    full[i][3] = out.c0_column[i];
  }
  out.rank = matrix_rank(full, 3, tol);
  out.augmented_rank = matrix_rank(full, 4, tol);
  return out;
}

}  // namespace cmaf
