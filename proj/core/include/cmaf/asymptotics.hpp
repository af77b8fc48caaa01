#pragma once

#include <utility>
#include <vector>

#include "cmaf/flow.hpp"
#include "cmaf/sphere.hpp"

namespace cmaf {

// Renormalised geometry along the flow (metric / r^2, Gauss curvature * r^2)
// and its limits at null infinity, per mode and perturbation case. Natural
// units r0 = 1 throughout; the k-coefficients carry an explicit factor r0 so
// they are dimensionless as stored.

struct RenormalizedDelta {
  double u = 0.0;
  double g_u = 0.0;  // renormalised metric coefficient, against Y_l * ground metric
  double k_u = 0.0;  // renormalised Gauss curvature coefficient, against Y_l
};

struct SpectrumEntry {
  int l = 0;
  double lambda = 0.0;
  double g_coeff = 0.0;    // limit metric eigencoefficient for input Y_l * r0
  double k_coeff_r0 = 0.0; // limit curvature eigenvalue times r0
  bool in_kernel = false;  // degrees 0 and 1
};

RenormalizedDelta renormalized_deltas(PerturbationKind kind, int l, double u);
RenormalizedDelta renormalized_deltas(int l, const ModeAmplitudes& amp, double u);

/// Closed-form limits (g, k*r0) of the renormalised deltas as u -> infinity.
/// Degrees 0 and 1 in the kernel are exact zeros, not rounded evaluations.
std::pair<double, double> limit_deltas(PerturbationKind kind, int l);

std::vector<SpectrumEntry> spectrum(int l_max, PerturbationKind kind = PerturbationKind::case_i);

/// |k_l / lambda_l + 1/2| * lambda_l for the case-i eigenvalues (r0 = 1 units);
/// tends to 1 from above as l grows.
double asymptote_deviation(int l);

/// Maximum of asymptote_deviation over 2 <= l <= l_max.
double asymptote_check(int l_max);

/// Grid-level wrapper of the diagonal curvature-perturbation map: analyze the
/// input profile (interpreted as delta_uf / r0 for case i, delta_f / r0 for
/// case ii), scale each degree by its k-eigencoefficient, synthesize back.
GridField apply_curvature_map(const GridField& input, int l_max,
                              PerturbationKind kind = PerturbationKind::case_i);

}  // namespace cmaf
