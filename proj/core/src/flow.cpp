#include "cmaf/flow.hpp"

#include <algorithm>
#include <cmath>

#include "cmaf/errors.hpp"
#include "cmaf/sphere.hpp"

namespace cmaf {

double ResidualVector::max_abs() const {
  double m = 0.0;
  for (const auto& [name, v] : named()) m = std::max(m, std::abs(v));
  return m;
}

std::vector<std::pair<const char*, double>> ResidualVector::named() const {
  return {{"trchibar_prop", res_trchibar_prop},
          {"trchiprime_prop", res_trchiprime_prop},
          {"mu_prop", res_mu_prop},
          {"codazzi_chibar", res_codazzi_chibar},
          {"codazzi_chiprime", res_codazzi_chiprime},
          {"eta_div", res_eta_div},
          {"eta_curl", res_eta_curl},
          {"omegabar_elliptic", res_omegabar_elliptic},
          {"omegabar_mean", res_omegabar_mean},
          {"gauss", res_gauss}};
}

namespace {

void check_mode(int l, double u) {
  if (l < 0) throw DomainError("flow: degree must be nonnegative");
  if (u < 0.0) throw DomainError("flow: require u >= 0");
}

// lapse algebra delta_a = A(u) delta_f + B(u) uf for l >= 1
double lapse_A(double lam, double r) { return 3.0 / (lam * r * r) + 1.0 / r; }
double lapse_B(double lam, double u, double r) {
  return 3.0 * u / (lam * r * r * r) - u / (r * r);
}
double lapse_A_deriv(double lam, double r) {
  return -6.0 / (lam * r * r * r) - 1.0 / (r * r);
}
double lapse_B_deriv(double lam, double u, double r) {
  const double r3 = r * r * r, r4 = r3 * r;
  return 3.0 / (lam * r3) - 9.0 * u / (lam * r4) - 1.0 / (r * r) + 2.0 * u / r3;
}

}  // namespace

double lapse_from_f(double u, double delta_f, int l, const ModeAmplitudes& amp) {
  check_mode(l, u);
  const double r = 1.0 + u;
  if (l == 0) return -amp.uf / (r * r);
  const double lam = eigenvalue(l);
  return lapse_A(lam, r) * delta_f + lapse_B(lam, u, r) * amp.uf;
}

double lapse_derivative(double u, double delta_f, double delta_a, int l,
                        const ModeAmplitudes& amp) {
  check_mode(l, u);
  const double r = 1.0 + u;
  if (l == 0) return 2.0 * amp.uf / (r * r * r);
  const double lam = eigenvalue(l);
  return lapse_A_deriv(lam, r) * delta_f + lapse_A(lam, r) * delta_a +
         lapse_B_deriv(lam, u, r) * amp.uf;
}

std::vector<ModeState> evolve_mode(int l, const ModeAmplitudes& amp, double u_max, int n_steps) {
  check_mode(l, u_max);
  if (n_steps < 1) throw DomainError("evolve_mode: n_steps must be >= 1");

  // The flow is linear in the amplitudes, so integrate the two unit solutions
  // and combine. This keeps the whole pipeline exactly linear in (f0, uf).
  const ModeAmplitudes unit_f{1.0, 0.0};
  const ModeAmplitudes unit_c{0.0, 1.0};
  auto combine = [&](double u, double pf, double pc) {
    const double af = lapse_from_f(u, pf, l, unit_f);
    const double ac = lapse_from_f(u, pc, l, unit_c);
    return ModeState{u, amp.f0 * pf + amp.uf * pc, amp.f0 * af + amp.uf * ac};
  };

  if (u_max == 0.0) return {combine(0.0, 1.0, 0.0)};
  const double h = u_max / n_steps;
  if (h > 1.0) throw StepError("evolve_mode: step exceeds horizon radius, raise n_steps");

  std::vector<ModeState> out;
  out.reserve(n_steps + 1);
  double pf = 1.0, pc = 0.0;
  out.push_back(combine(0.0, pf, pc));
  for (int k = 0; k < n_steps; ++k) {
    const double u = k * h;
    const double f1 = lapse_from_f(u, pf, l, unit_f);
    const double c1 = lapse_from_f(u, pc, l, unit_c);
    const double f2 = lapse_from_f(u + 0.5 * h, pf + 0.5 * h * f1, l, unit_f);
    const double c2 = lapse_from_f(u + 0.5 * h, pc + 0.5 * h * c1, l, unit_c);
    const double f3 = lapse_from_f(u + 0.5 * h, pf + 0.5 * h * f2, l, unit_f);
    const double c3 = lapse_from_f(u + 0.5 * h, pc + 0.5 * h * c2, l, unit_c);
    const double f4 = lapse_from_f(u + h, pf + h * f3, l, unit_f);
    const double c4 = lapse_from_f(u + h, pc + h * c3, l, unit_c);
    pf += h / 6.0 * (f1 + 2.0 * f2 + 2.0 * f3 + f4);
    pc += h / 6.0 * (c1 + 2.0 * c2 + 2.0 * c3 + c4);
    out.push_back(combine((k + 1) * h, pf, pc));
  }
  return out;
}

std::vector<ModeState> evolve_mode(PerturbationKind kind, int l, double u_max, int n_steps) {
  return evolve_mode(l, pure_amplitudes(kind), u_max, n_steps);
}

double closed_form_f(int l, const ModeAmplitudes& amp, double u) {
  check_mode(l, u);
  const double r = 1.0 + u;
  if (l == 0) return amp.f0 - amp.uf * (u / r);
  const double lam = eigenvalue(l);
  const double growth = std::exp(3.0 / lam * (1.0 - 1.0 / r));
  const double from_f0 = r * growth;
  const double from_uf =
      r / 3.0 * lam * (lam + 2.0) - (lam + 1.0) + 1.0 / r - r / 3.0 * lam * (lam - 1.0) * growth;
  return amp.f0 * from_f0 + amp.uf * from_uf;
}

double closed_form_f(PerturbationKind kind, int l, double u) {
  return closed_form_f(l, pure_amplitudes(kind), u);
}

ModeState closed_form_state(int l, const ModeAmplitudes& amp, double u) {
  const double f = closed_form_f(l, amp, u);
  return {u, f, lapse_from_f(u, f, l, amp)};
}

ModeState closed_form_state(PerturbationKind kind, int l, double u) {
  return closed_form_state(l, pure_amplitudes(kind), u);
}

DerivedQuantities derived_quantities(int l, const ModeAmplitudes& amp, const ModeState& state) {
  check_mode(l, state.u);
  const double u = state.u, f = state.delta_f, a = state.delta_a, c = amp.uf;
  const double lam = eigenvalue(l);
  const double r = 1.0 + u;
  const double r2 = r * r, r3 = r2 * r, r4 = r3 * r, r5 = r4 * r;

  DerivedQuantities d;
  d.gslash = 2.0 * r * f + 2.0 * u * c;
  d.trchibar = -2.0 / r2 * f - (2.0 * r - 4.0) / r3 * c + 2.0 * lam / r2 * c + 2.0 / r * a;
  d.trchiprime =
      2.0 * (1.0 - u) / r3 * f - 2.0 * u * u / r4 * c + 2.0 * lam / r2 * f - 2.0 * u / r2 * a;
  d.K = (lam - 2.0) / r3 * f + (lam - 2.0) * u / r4 * c;
  d.rho = 3.0 / r4 * f + 3.0 * u / r5 * c;
  d.omegabar = 0.5 * lapse_derivative(u, f, a, l, amp) - c / r3;
  if (l == 0) {
    d.rbar = f + u / r * c;
    d.mu = -d.rho;  // gradient and tracefree-Hessian profiles vanish at l = 0
    return d;
  }
  d.chibarhat = -2.0 * c;
  d.chiprimehat = -2.0 * f;
  d.eta = a + u / r2 * c - f / r;
  d.betabar = 3.0 / r3 * c;
  d.beta = 3.0 / r3 * f;
  return d;
}

DerivedQuantities derived_quantities(PerturbationKind kind, int l, const ModeState& state) {
  return derived_quantities(l, pure_amplitudes(kind), state);
}

ResidualVector basic_equation_residuals(int l, const ModeAmplitudes& amp,
                                        const ModeState& state) {
  check_mode(l, state.u);
  const double u = state.u, f = state.delta_f, a = state.delta_a, c = amp.uf;
  const double lam = eigenvalue(l);
  const double r = 1.0 + u;
  const double r2 = r * r, r3 = r2 * r, r4 = r3 * r, r5 = r4 * r, r6 = r5 * r;

  const DerivedQuantities d = derived_quantities(l, amp, state);
  const double da = lapse_derivative(u, f, a, l, amp);

  // flow derivatives of the derived coefficients, with d(delta_f)/du := a and
  // d(delta_a)/du := da
  const double ddu_trchibar =
      4.0 / r3 * f + ((4.0 * r - 12.0) / r4 - 4.0 * lam / r3) * c - 2.0 / r2 * a  // partial u
      - 2.0 / r2 * a                                                              // f-slot
      + 2.0 / r * da;                                                             // a-slot
  const double ddu_trchiprime =
      ((4.0 * u - 8.0) / r4 - 4.0 * lam / r3) * f + (-4.0 * u / r4 + 8.0 * u * u / r5) * c +
      (-2.0 / r2 + 4.0 * u / r3) * a                                        // partial u
      + (2.0 * (1.0 - u) / r3 + 2.0 * lam / r2) * a                         // f-slot
      - 2.0 * u / r2 * da;                                                  // a-slot
  const double ddu_rho = -12.0 / r5 * f + (3.0 / r5 - 15.0 * u / r6) * c + 3.0 / r4 * a;

  ResidualVector res;
  res.res_trchibar_prop = ddu_trchibar - (4.0 / r * d.omegabar - 2.0 / r * d.trchibar);
  // -2 trchi'_bg delta(omegabar) with trchi'_bg = 2(r-1)/r^2 on the background
  res.res_trchiprime_prop =
      ddu_trchiprime - (-4.0 * (r - 1.0) / r2 * d.omegabar - d.trchiprime / r -
                        (r - 1.0) / r2 * d.trchibar + 2.0 * d.mu);
  const double trchibar_mean = l == 0 ? d.trchibar : 0.0;
  const double ddu_mu = l == 0 ? -ddu_rho : 0.0;
  res.res_mu_prop = ddu_mu - (-3.0 / r * d.mu - 1.5 / r3 * trchibar_mean);
  res.res_gauss =
      d.K - (-d.rho + (r - 1.0) / (2.0 * r2) * d.trchibar + d.trchiprime / (2.0 * r));
  if (l == 0) {
    // gradient-profile equations are trivially 0 = 0 at degree zero; the mean
    // conditions carry the content
    res.res_eta_div = r2 * d.rho + r2 * d.mu;
    res.res_omegabar_mean = d.omegabar;
    return res;
  }
  res.res_codazzi_chibar = tracefree_hessian_div_factor(l) * d.chibarhat -
                           (r2 / 2.0 * d.trchibar - r * d.eta - r2 * d.betabar);
  res.res_codazzi_chiprime = tracefree_hessian_div_factor(l) * d.chiprimehat -
                             (r2 / 2.0 * d.trchiprime + (r - 1.0) * d.eta - r2 * d.beta);
  res.res_eta_div = -lam * d.eta - (-r2 * d.rho - r2 * d.mu);
  res.res_eta_curl = 0.0;  // the torsion perturbation is an exact gradient
  res.res_omegabar_elliptic =
      -lam * d.omegabar - (-0.75 / r * d.trchibar + lam * d.betabar);
  res.res_omegabar_mean = 0.0;
  return res;
}

ResidualVector basic_equation_residuals(PerturbationKind kind, int l, const ModeState& state) {
  return basic_equation_residuals(l, pure_amplitudes(kind), state);
}

std::pair<double, double> gauss_delta_two_ways(int l, const ModeAmplitudes& amp,
                                               const ModeState& state) {
  const DerivedQuantities d = derived_quantities(l, amp, state);
  const double r = 1.0 + state.u;
  const double from_metric = d.K;
  const double from_gauss =
      -d.rho + (r - 1.0) / (2.0 * r * r) * d.trchibar + d.trchiprime / (2.0 * r);
  return {from_metric, from_gauss};
}

std::pair<double, double> gauss_delta_two_ways(PerturbationKind kind, int l,
                                               const ModeState& state) {
  return gauss_delta_two_ways(l, pure_amplitudes(kind), state);
}

}  // namespace cmaf
