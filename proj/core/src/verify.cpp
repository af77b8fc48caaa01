#include "cmaf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "cmaf/asymptotics.hpp"
#include "cmaf/background.hpp"
#include "cmaf/bondi.hpp"
#include "cmaf/flow.hpp"
#include "cmaf/format.hpp"
#include "cmaf/linear_geometry.hpp"
#include "cmaf/oracles.hpp"
#include "cmaf/sphere.hpp"

namespace cmaf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr PerturbationKind kCases[2] = {PerturbationKind::case_i, PerturbationKind::case_ii};

// Accumulates per-check residuals, each against its own tolerance; reports the
// residual with the worst residual/tolerance ratio.
struct Collector {
  SuiteResult result;
  double worst_ratio = -1.0;

  explicit Collector(std::string name) { result.name = std::move(name); result.pass = true; }

  void check(double residual, double tol) {
    ++result.checks;
    const double ratio = std::abs(residual) / tol;
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      result.max_residual = std::abs(residual);
      result.threshold = tol;
    }
    if (!(ratio <= 1.0)) result.pass = false;
  }
  void require(bool ok) {
    ++result.checks;
    if (!ok) result.pass = false;
  }
};

double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

SuiteResult background_identities() {
  Collector c("background_identities");
  for (int k = 1; k <= 200; ++k) {
    const double s = 100.0 * k / 200.0;
    const auto pt = background_point(s, 0.0);
    const auto f = background_fields(s, 0.0);
    c.check((pt.r - (1.0 + s)) / pt.r, 1e-12);
    c.check(pt.omega_sq - 1.0, 1e-12);
    c.check(f.omegabar, 1e-12);
    c.check(f.hawking_mass - 0.5, 1e-12);
    c.check((f.tr_chibar - 2.0 / pt.r) * pt.r, 1e-12);
    c.require(f.mu == -f.rho);  // stored with opposite signs, exactly
  }
  return c.result;
}

SuiteResult background_derivatives() {
  Collector c("background_derivatives_fd");
  const double h = 1e-6;
  for (int i = 0; i <= 10; ++i) {
    for (int j = -4; j <= 4; ++j) {
      const double s = 0.05 + i;
      const double sbar = 0.25 * j;
      const auto f = background_fields(s, sbar);
      const double drds =
          (solve_radius(s + h, sbar, 1e-15) - solve_radius(s - h, sbar, 1e-15)) / (2 * h);
      const double drdsb =
          (solve_radius(s, sbar + h, 1e-15) - solve_radius(s, sbar - h, 1e-15)) / (2 * h);
      c.check(rel_err(f.dr_ds, drds), 1e-6);
      c.check(rel_err(f.dr_dsbar, drdsb), 1e-6);
    }
  }
  return c.result;
}

SuiteResult initial_leaf_tables() {
  Collector c("initial_leaf_tables");
  for (int l = 0; l <= 8; ++l) {
    for (PerturbationKind kind : kCases) {
      const auto amp = pure_amplitudes(kind);
      const InitialLeafState st = initial_leaf_state(kind, l);
      // the flow route at u = 0 must reproduce the tables
      const ModeState s0 = closed_form_state(l, amp, 0.0);
      const DerivedQuantities d = derived_quantities(l, amp, s0);
      c.check(s0.delta_a - st.a0, 1e-12);
      c.check(d.gslash - st.gslash0, 1e-12);
      c.check(d.rbar - st.rbar0, 1e-12);
      c.check(d.trchibar - st.trchibar0, 1e-12);
      c.check(d.chibarhat - st.chibarhat0, 1e-12);
      c.check(d.trchiprime - st.trchiprime0, 1e-12);
      c.check(d.chiprimehat - st.chiprimehat0, 1e-12);
      c.check(d.eta - st.eta0, 1e-12);
      c.check(d.omegabar - st.omegabar0, 1e-12);
      c.check(d.K - st.K0, 1e-12);
      c.check(d.mu - st.mu0, 1e-12);
      c.check(d.betabar - st.betabar0, 1e-12);
      c.check(d.rho - st.rho0, 1e-12);
      c.check(d.beta - st.beta0, 1e-12);
      const auto two = initial_gauss_two_ways(l, amp);
      c.check(two.from_metric - two.from_gauss_equation, 1e-12);
      c.check(two.from_metric - st.K0, 1e-12);
      const auto hyp = linearized_hypersurface_coeffs(0.0, l, amp);
      c.check(hyp.rho_dot - st.rho0, 1e-12);
      if (l >= 1) {  // gradient-profile coefficients only carry content off l = 0
        c.check(hyp.betabar_dot - st.betabar0, 1e-12);
        c.check(hyp.beta_ddot - st.beta0, 1e-12);
      }
    }
  }
  return c.result;
}

SuiteResult linearity_mixed() {
  Collector c("linearity_mixed");
  const std::vector<MixedComponent> parts = {{2, 0.75, -1.25}, {3, -0.5, 2.0}};
  const auto pc = PerturbationCase::mixed(parts);
  for (const auto& comp : parts) {
    const auto amp = pc.amplitudes_at(comp.l);
    const InitialLeafState mixed = initial_leaf_state(pc, comp.l);
    const InitialLeafState ci = initial_leaf_state(PerturbationKind::case_i, comp.l);
    const InitialLeafState cii = initial_leaf_state(PerturbationKind::case_ii, comp.l);
    c.require(mixed.trchibar0 ==
              comp.amp_case_i * ci.trchibar0 + comp.amp_case_ii * cii.trchibar0);
    c.require(mixed.omegabar0 ==
              comp.amp_case_i * ci.omegabar0 + comp.amp_case_ii * cii.omegabar0);
    c.require(mixed.K0 == comp.amp_case_i * ci.K0 + comp.amp_case_ii * cii.K0);
    // evolved trajectories combine the unit solutions bit-exactly
    const auto traj_mixed = evolve_mode(comp.l, amp, 2.0, 64);
    const auto traj_i = evolve_mode(comp.l, ModeAmplitudes{0.0, 1.0}, 2.0, 64);
    const auto traj_ii = evolve_mode(comp.l, ModeAmplitudes{1.0, 0.0}, 2.0, 64);
    for (std::size_t k = 0; k < traj_mixed.size(); k += 16) {
      c.require(traj_mixed[k].delta_f == comp.amp_case_i * traj_i[k].delta_f +
                                             comp.amp_case_ii * traj_ii[k].delta_f);
      c.require(traj_mixed[k].delta_a == comp.amp_case_i * traj_i[k].delta_a +
                                             comp.amp_case_ii * traj_ii[k].delta_a);
    }
    c.require(closed_form_f(comp.l, amp, 3.0) ==
              comp.amp_case_i * closed_form_f(comp.l, ModeAmplitudes{0.0, 1.0}, 3.0) +
                  comp.amp_case_ii * closed_form_f(comp.l, ModeAmplitudes{1.0, 0.0}, 3.0));
  }
  return c.result;
}

SuiteResult ode_vs_closed_form(const VerifyOptions& opt) {
  Collector c("ode_vs_closed_form");
  for (PerturbationKind kind : kCases) {
    for (int l = 0; l <= 6; ++l) {
      const auto traj = evolve_mode(kind, l, opt.u_max, opt.n_steps);
      const ModeState& last = traj.back();
      const double exact = closed_form_f(kind, l, last.u);
      c.check(rel_err(last.delta_f, exact), 1e-9);
    }
  }
  return c.result;
}

SuiteResult rk4_convergence(const VerifyOptions& opt) {
  Collector c("rk4_convergence_order");
  double min_order = 1e9;
  for (PerturbationKind kind : kCases) {
    for (int l = 0; l <= 6; ++l) {
      const double exact = closed_form_f(kind, l, opt.u_max);
      std::vector<double> errs;
      for (int n = 32; n <= 512; n *= 2) {
        const auto traj = evolve_mode(kind, l, opt.u_max, n);
        errs.push_back(std::abs(traj.back().delta_f - exact));
      }
      const double floor = 1e-13 * std::max(1.0, std::abs(exact));
      if (*std::max_element(errs.begin(), errs.end()) <= floor) {
        c.require(true);  // integrator is exact for this mode; no order to fit
        continue;
      }
      double order_sum = 0.0;
      int ratios = 0;
      for (std::size_t k = 0; k + 1 < errs.size(); ++k) {
        if (errs[k + 1] <= floor) break;
        order_sum += std::log2(errs[k] / errs[k + 1]);
        ++ratios;
      }
      const double order = ratios > 0 ? order_sum / ratios : 4.0;
      min_order = std::min(min_order, order);
      c.require(order >= 3.8);
    }
  }
  c.result.max_residual = min_order;
  c.result.threshold = 3.8;
  c.result.note = "minimum measured order, gate >= threshold";
  return c.result;
}

SuiteResult route_coincidence(const VerifyOptions& opt) {
  Collector c("basic_equation_residuals");
  const double us[] = {0.0, 0.5, 1.0, 5.0, 50.0};
  for (PerturbationKind kind : kCases) {
    for (int l = 0; l <= 8; ++l) {
      for (double u : us) {
        const ModeState st = closed_form_state(kind, l, u);
        c.check(basic_equation_residuals(kind, l, st).max_abs(), opt.tol);
        const auto [k1, k2] = gauss_delta_two_ways(kind, l, st);
        c.check(k1 - k2, opt.tol);
      }
    }
  }
  return c.result;
}

SuiteResult residual_sensitivity() {
  Collector c("residual_sensitivity");
  double weakest = 1e300;
  for (PerturbationKind kind : kCases) {
    for (int l = 1; l <= 8; ++l) {
      ModeState st = closed_form_state(kind, l, 2.0);
      st.delta_f *= 1.01;
      const double trigger = basic_equation_residuals(kind, l, st).max_abs();
      weakest = std::min(weakest, trigger);
      c.require(trigger > 1e-4);
    }
  }
  c.result.max_residual = weakest;
  c.result.threshold = 1e-4;
  c.result.note = "weakest perturbed-state response, gate > threshold";
  return c.result;
}

SuiteResult spectrum_checks() {
  Collector c("spectrum");
  const auto spec_i = spectrum(64, PerturbationKind::case_i);
  const auto spec_ii = spectrum(64, PerturbationKind::case_ii);
  c.require(spec_i[0].k_coeff_r0 == 0.0 && spec_i[1].k_coeff_r0 == 0.0);
  c.require(spec_ii[0].k_coeff_r0 == 0.0 && spec_ii[1].k_coeff_r0 == 0.0);
  c.require(spec_i[0].in_kernel && spec_i[1].in_kernel && !spec_i[2].in_kernel);
  c.check(spec_i[2].k_coeff_r0 - (64.0 - 40.0 * std::exp(0.5)), 1e-10);
  for (int l = 2; l <= 32; ++l) {
    c.require(spec_i[l].k_coeff_r0 < 0.0);
    c.require(spec_ii[l].k_coeff_r0 > 0.0);
    const double lam = eigenvalue(l);
    c.check(rel_err(spec_i[l].k_coeff_r0, 0.5 * (lam - 2.0) * spec_i[l].g_coeff), 1e-12);
    c.check(rel_err(spec_ii[l].k_coeff_r0, 0.5 * (lam - 2.0) * spec_ii[l].g_coeff), 1e-12);
  }
  for (int l = 5; l <= 64; ++l) c.require(asymptote_deviation(l) <= 1.1);
  return c.result;
}

SuiteResult asymptotic_limits() {
  Collector c("asymptotic_limits");
  for (PerturbationKind kind : kCases) {
    for (int l = 1; l <= 6; ++l) {
      const auto [g_inf, k_inf] = limit_deltas(kind, l);
      const auto far = renormalized_deltas(kind, l, 1e4);
      c.check(rel_err(far.g_u, g_inf), 1e-3);
      if (l >= 2) c.check(rel_err(far.k_u, k_inf), 1e-3);
      // decay exponents of the metric and curvature deviations over [1e2, 1e4]
      std::vector<double> lu, lg, lk;
      for (int k = 0; k <= 8; ++k) {
        const double u = 100.0 * std::pow(10.0, k / 4.0);
        const auto rd = renormalized_deltas(kind, l, u);
        lu.push_back(std::log(u));
        lg.push_back(std::log(std::abs(rd.g_u - g_inf)));
        if (l >= 2) lk.push_back(std::log(std::abs(rd.k_u - k_inf)));
      }
      auto slope = [&lu](const std::vector<double>& ly) {
        double mx = 0, my = 0;
        for (std::size_t k = 0; k < lu.size(); ++k) {
          mx += lu[k];
          my += ly[k];
        }
        mx /= lu.size();
        my /= lu.size();
        double num = 0, den = 0;
        for (std::size_t k = 0; k < lu.size(); ++k) {
          num += (lu[k] - mx) * (ly[k] - my);
          den += (lu[k] - mx) * (lu[k] - mx);
        }
        return num / den;
      };
      c.check(slope(lg) + 1.0, 0.05);
      if (l >= 2) c.check(slope(lk) + 1.0, 0.05);
    }
  }
  return c.result;
}

SuiteResult energy_momentum() {
  Collector c("energy_momentum");
  const auto grid = SphereGrid::for_degree(8);
  const double dp_unit_i = std::exp(1.5) / 3.0 - 4.0 / 3.0;
  const double dp_unit_ii = -0.5 * std::exp(1.5);
  for (PerturbationKind kind : kCases) {
    const double unit = kind == PerturbationKind::case_i ? dp_unit_i : dp_unit_ii;
    KernelPerturbation p;
    p.kind = kind;
    p.c0 = 0.4;
    p.c = {0.3, -1.2, 0.7};
    const auto em = energy_momentum_delta(p, grid);
    c.check(em.dE, 1e-12);
    c.check(em.dMB, 1e-12);
    for (int i = 0; i < 3; ++i) c.check(em.dP[i] - p.c[i] * unit, 1e-10);
    const auto resp = momentum_surjectivity_check(grid, kind);
    c.require(resp.rank == 3 && resp.augmented_rank == 3);
    for (int i = 0; i < 3; ++i) {
      c.check(resp.c0_column[i], 1e-12);
      for (int j = 0; j < 3; ++j) c.check(resp.matrix[i][j] - (i == j ? unit : 0.0), 1e-10);
    }
  }
  return c.result;
}

SuiteResult spectral_layer() {
  Collector c("spectral_layer");
  const int l_max = 8;
  const auto grid = SphereGrid::for_degree(l_max);
  c.check(grid->total_weight() - 4.0 * kPi, 1e-12);

  // round trip and Parseval on a fixed random band-limited field
  std::mt19937 rng(20240811u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  SpectralField a(l_max);
  for (double& v : a.coeff) v = dist(rng);
  const GridField synth = synthesize(a, grid);
  const SpectralField back = analyze(synth, l_max);
  for (std::size_t k = 0; k < a.coeff.size(); ++k) c.check(back.coeff[k] - a.coeff[k], 1e-12);
  double parseval = 0.0;
  for (double v : a.coeff) parseval += v * v;
  c.check((inner_product(synth, synth) - parseval) / std::max(1.0, parseval), 1e-10);

  // spectral eigenrelation on the grid
  for (int l = 0; l <= l_max; ++l) {
    SpectralField e(l_max);
    e.at(l, std::min(l, 1)) = 1.0;
    const GridField y = synthesize(e, grid);
    const GridField lap = synthesize(laplacian(analyze(y, l_max)), grid);
    double sup = 0.0;
    for (std::size_t k = 0; k < y.values.size(); ++k)
      sup = std::max(sup, std::abs(lap.values[k] + eigenvalue(l) * y.values[k]));
    c.check(sup, 1e-8);
  }

  // divergence identity factor against the finite-difference operator oracle
  for (int l = 1; l <= 6; ++l) {
    const int m = l >= 2 ? 2 : 1;
    auto fn = [l, m](double th, double ph) { return real_harmonic(l, m, th, ph); };
    double worst = 0.0;
    for (double theta : {0.7, 1.3, 2.1}) {
      for (double phi : {0.4, 2.9}) {
        const auto div = oracles::fd_div_tracefree_hessian(fn, theta, phi);
        const auto grad = oracles::fd_gradient(fn, theta, phi);
        const double factor = tracefree_hessian_div_factor(l);
        const double scale =
            std::max({std::abs(factor * grad[0]), std::abs(factor * grad[1]), 1.0});
        worst = std::max({worst, std::abs(div[0] - factor * grad[0]) / scale,
                          std::abs(div[1] - factor * grad[1]) / scale});
      }
    }
    c.check(worst, 1e-6);
  }

  // first-harmonics basis normalization, zero mean, orthogonality
  const auto basis = first_harmonics_basis(grid);
  for (int i = 0; i < 3; ++i) {
    c.check(inner_product(basis[i], basis[i]) - 4.0 * kPi / 3.0, 1e-12);
    c.check(integrate(basis[i]), 1e-12);
    for (int j = i + 1; j < 3; ++j) c.check(inner_product(basis[i], basis[j]), 1e-12);
  }
  return c.result;
}

SuiteResult homogeneity() {
  Collector c("homogeneity");
  const double r0 = 2.0;
  // lengths scale by r0, expansions by 1/r0, curvatures by 1/r0^2
  const auto pt = background_point(1.0, 0.3);
  const auto f = background_fields(1.0, 0.3);
  c.check(rel_err(scale_dimension(pt.r, 1, r0), r0 * pt.r), 1e-12);
  c.check(rel_err(scale_dimension(pt.omega_sq, 0, r0), pt.omega_sq), 1e-12);
  c.check(rel_err(scale_dimension(f.tr_chibar, -1, r0), f.tr_chibar / r0), 1e-12);
  c.check(rel_err(scale_dimension(f.rho, -2, r0), f.rho / (r0 * r0)), 1e-12);
  c.check(rel_err(scale_dimension(f.hawking_mass, 1, r0), r0 / 2.0), 1e-12);
  const ModeState st = closed_form_state(PerturbationKind::case_ii, 2, 1.0);
  c.check(rel_err(scale_dimension(st.delta_f, 1, r0), r0 * st.delta_f), 1e-12);
  const auto grid = SphereGrid::for_degree(4);
  KernelPerturbation p;
  p.c = {1.0, 0.0, 0.0};
  const auto em = energy_momentum_delta(p, grid);
  c.check(rel_err(scale_dimension(em.dP[0], 1, r0), r0 * em.dP[0]), 1e-12);
  return c.result;
}

SuiteResult determinism() {
  Collector c("determinism");
  auto spectrum_csv = [] {
    CsvWriter csv({"l", "lambda", "k"});
    for (const auto& e : spectrum(16)) csv.append({double(e.l), e.lambda, e.k_coeff_r0});
    return csv.text();
  };
  c.require(spectrum_csv() == spectrum_csv());
  auto trajectory_csv = [] {
    CsvWriter csv({"u", "delta_f", "delta_a"});
    for (const auto& st : evolve_mode(PerturbationKind::case_i, 2, 5.0, 256))
      csv.append({st.u, st.delta_f, st.delta_a});
    return csv.text();
  };
  c.require(trajectory_csv() == trajectory_csv());
  return c.result;
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& opt) {
  std::vector<SuiteResult> out;
  out.push_back(background_identities());
  out.push_back(background_derivatives());
  out.push_back(initial_leaf_tables());
  out.push_back(linearity_mixed());
  out.push_back(ode_vs_closed_form(opt));
  out.push_back(rk4_convergence(opt));
  out.push_back(route_coincidence(opt));
  out.push_back(residual_sensitivity());
  out.push_back(spectrum_checks());
  out.push_back(asymptotic_limits());
  out.push_back(energy_momentum());
  out.push_back(spectral_layer());
  out.push_back(homogeneity());
  out.push_back(determinism());
  return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::string verification_report(const std::vector<SuiteResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += r.pass ? "[PASS] " : "[FAIL] ";
    out += r.name;
    out += ": checks=" + std::to_string(r.checks);
    out += " max_residual=" + format_number(r.max_residual);
    out += " threshold=" + format_number(r.threshold);
    if (!r.note.empty()) out += " (" + r.note + ")";
    out += '\n';
  }
  out += all_passed(results) ? "ALL SUITES PASSED\n" : "SUITE FAILURES PRESENT\n";
  return out;
}

}  // namespace cmaf
