#include "cmaf/asymptotics.hpp"

#include <cmath>

#include "cmaf/errors.hpp"

namespace cmaf {

namespace {

// expm1(x) - x by series for small x; keeps the bracket below stable when the
// leading terms cancel at large lambda.
double expm1_minus_x(double x) {
  if (std::abs(x) > 0.5) return std::expm1(x) - x;
  double term = 0.5 * x * x;
  double sum = term;
  for (int n = 3; n <= 24; ++n) {
    term *= x / n;
    sum += term;
    if (std::abs(term) < 1e-20 * std::abs(sum)) break;
  }
  return sum;
}

// B(lambda) = (lambda + 2) - (lambda - 1) e^{3/lambda}, grouped as
// 3/lambda - (lambda - 1)(expm1(3/lambda) - 3/lambda).
double limit_bracket(double lam) {
  const double x = 3.0 / lam;
  return x - (lam - 1.0) * expm1_minus_x(x);
}

}  // namespace

RenormalizedDelta renormalized_deltas(int l, const ModeAmplitudes& amp, double u) {
  const ModeState st = closed_form_state(l, amp, u);
  const DerivedQuantities d = derived_quantities(l, amp, st);
  const double r = 1.0 + u;
  RenormalizedDelta out;
  out.u = u;
  out.g_u = d.gslash / (r * r) - 2.0 * d.rbar / r;
  out.k_u = r * r * d.K + 2.0 * d.rbar / r;
  return out;
}

RenormalizedDelta renormalized_deltas(PerturbationKind kind, int l, double u) {
  return renormalized_deltas(l, pure_amplitudes(kind), u);
}

std::pair<double, double> limit_deltas(PerturbationKind kind, int l) {
  if (l < 0) throw DomainError("limit_deltas: degree must be nonnegative");
  if (l == 0) return {0.0, 0.0};
  const double lam = eigenvalue(l);
  if (kind == PerturbationKind::case_i) {
    const double g = 2.0 / 3.0 * lam * limit_bracket(lam);
    if (l == 1) return {g, 0.0};
    const double k = lam / 3.0 * (lam - 2.0) * limit_bracket(lam);
    return {g, k};
  }
  const double growth = std::exp(3.0 / lam);
  const double g = 2.0 * growth;
  if (l == 1) return {g, 0.0};
  return {g, (lam - 2.0) * growth};
}

std::vector<SpectrumEntry> spectrum(int l_max, PerturbationKind kind) {
  if (l_max < 1) throw DomainError("spectrum: require l_max >= 1");
  std::vector<SpectrumEntry> out;
  out.reserve(l_max + 1);
  for (int l = 0; l <= l_max; ++l) {
    const auto [g, k] = limit_deltas(kind, l);
    out.push_back({l, eigenvalue(l), g, k, l <= 1});
  }
  return out;
}

double asymptote_deviation(int l) {
  if (l < 2) throw DomainError("asymptote_deviation: degrees 0 and 1 are kernel modes");
  const double lam = eigenvalue(l);
  const auto [g, k] = limit_deltas(PerturbationKind::case_i, l);
  return std::abs(k / lam + 0.5) * lam;
}

double asymptote_check(int l_max) {
  if (l_max < 2) throw DomainError("asymptote_check: require l_max >= 2");
  double worst = 0.0;
  for (int l = 2; l <= l_max; ++l) worst = std::max(worst, asymptote_deviation(l));
  return worst;
}

GridField apply_curvature_map(const GridField& input, int l_max, PerturbationKind kind) {
  SpectralField coeffs = analyze(input, l_max);
  for (int l = 0; l <= l_max; ++l) {
    const auto [g, k] = limit_deltas(kind, l);
    for (int m = -l; m <= l; ++m) coeffs.at(l, m) *= k;
  }
  return synthesize(coeffs, input.grid);
}

}  // namespace cmaf
