#include "cmaf/linear_geometry.hpp"

#include "cmaf/errors.hpp"
#include "cmaf/sphere.hpp"

namespace cmaf {

ModeAmplitudes pure_amplitudes(PerturbationKind kind, double amplitude) {
  return kind == PerturbationKind::case_i ? ModeAmplitudes{0.0, amplitude}
                                          : ModeAmplitudes{amplitude, 0.0};
}

PerturbationCase PerturbationCase::pure(PerturbationKind k) {
  PerturbationCase pc;
  pc.kind = k == PerturbationKind::case_i ? Kind::case_i : Kind::case_ii;
  return pc;
}

PerturbationCase PerturbationCase::mixed(std::vector<MixedComponent> parts) {
  PerturbationCase pc;
  pc.kind = Kind::mixed;
  pc.components = std::move(parts);
  return pc;
}

ModeAmplitudes PerturbationCase::amplitudes_at(int l) const {
  switch (kind) {
    case Kind::case_i:
      return pure_amplitudes(PerturbationKind::case_i);
    case Kind::case_ii:
      return pure_amplitudes(PerturbationKind::case_ii);
    case Kind::mixed: {
      ModeAmplitudes amp;
      for (const auto& comp : components) {
        if (comp.l != l) continue;
        amp.uf += comp.amp_case_i;
        amp.f0 += comp.amp_case_ii;
      }
      return amp;
    }
  }
  return {};
}

namespace {

// Unit-amplitude initial-leaf tables. These are the explicit mode-l solutions
// of the initial-leaf system, so the rational entries come out bit-exact.
InitialLeafState unit_case_i(int l) {
  InitialLeafState st;
  if (l == 0) {
    st.a0 = -1.0;
    return st;  // every other perturbation vanishes
  }
  const double lam = eigenvalue(l);
  st.trchibar0 = 2.0 + 2.0 * lam;
  st.chibarhat0 = -2.0;
  st.omegabar0 = (3.0 - 3.0 * lam) / (2.0 * lam);
  st.betabar0 = 3.0;
  return st;
}

InitialLeafState unit_case_ii(int l) {
  InitialLeafState st;
  st.gslash0 = 2.0;
  st.rho0 = 3.0;
  if (l == 0) {
    st.rbar0 = 1.0;
    st.trchibar0 = -2.0;
    st.trchiprime0 = 2.0;
    st.K0 = -2.0;
    st.mu0 = -3.0;
    return st;
  }
  const double lam = eigenvalue(l);
  st.a0 = (3.0 + lam) / lam;
  st.trchibar0 = 6.0 / lam;
  st.trchiprime0 = 2.0 + 2.0 * lam;
  st.chiprimehat0 = -2.0;
  st.eta0 = 3.0 / lam;
  st.omegabar0 = 9.0 / (2.0 * lam * lam);
  st.K0 = lam - 2.0;
  st.beta0 = 3.0;
  return st;
}

InitialLeafState scaled_sum(const InitialLeafState& a, double ca,
                            const InitialLeafState& b, double cb) {
  InitialLeafState st;
  st.a0 = ca * a.a0 + cb * b.a0;
  st.gslash0 = ca * a.gslash0 + cb * b.gslash0;
  st.rbar0 = ca * a.rbar0 + cb * b.rbar0;
  st.trchibar0 = ca * a.trchibar0 + cb * b.trchibar0;
  st.chibarhat0 = ca * a.chibarhat0 + cb * b.chibarhat0;
  st.trchiprime0 = ca * a.trchiprime0 + cb * b.trchiprime0;
  st.chiprimehat0 = ca * a.chiprimehat0 + cb * b.chiprimehat0;
  st.eta0 = ca * a.eta0 + cb * b.eta0;
  st.omegabar0 = ca * a.omegabar0 + cb * b.omegabar0;
  st.K0 = ca * a.K0 + cb * b.K0;
  st.mu0 = ca * a.mu0 + cb * b.mu0;
  st.betabar0 = ca * a.betabar0 + cb * b.betabar0;
  st.rho0 = ca * a.rho0 + cb * b.rho0;
  st.beta0 = ca * a.beta0 + cb * b.beta0;
  return st;
}

void check_degree(int l) {
  if (l < 0) throw DomainError("perturbation mode: degree must be nonnegative");
}

}  // namespace

double initial_lapse(PerturbationKind kind, int l) {
  check_degree(l);
  if (kind == PerturbationKind::case_i) return l == 0 ? -1.0 : 0.0;
  return l == 0 ? 0.0 : (3.0 + eigenvalue(l)) / eigenvalue(l);
}

double initial_lapse(int l, const ModeAmplitudes& amp) {
  check_degree(l);
  return amp.uf * initial_lapse(PerturbationKind::case_i, l) +
         amp.f0 * initial_lapse(PerturbationKind::case_ii, l);
}

InitialLeafState initial_leaf_state(PerturbationKind kind, int l) {
  check_degree(l);
  return kind == PerturbationKind::case_i ? unit_case_i(l) : unit_case_ii(l);
}

InitialLeafState initial_leaf_state(int l, const ModeAmplitudes& amp) {
  check_degree(l);
  return scaled_sum(unit_case_i(l), amp.uf, unit_case_ii(l), amp.f0);
}

InitialLeafState initial_leaf_state(const PerturbationCase& pc, int l) {
  return initial_leaf_state(l, pc.amplitudes_at(l));
}

LinearizedHypersurfaceGeometry linearized_hypersurface_coeffs(double s, PerturbationKind kind,
                                                              int l) {
  return linearized_hypersurface_coeffs(s, l, pure_amplitudes(kind));
}

LinearizedHypersurfaceGeometry linearized_hypersurface_coeffs(double s, int l,
                                                              const ModeAmplitudes& amp) {
  check_degree(l);
  if (s < 0.0) throw DomainError("linearized_hypersurface_coeffs: require s >= 0");
  const double lam = eigenvalue(l);
  const double r = 1.0 + s;
  const double r2 = r * r, r3 = r2 * r, r4 = r3 * r, r5 = r4 * r;
  const double f = amp.f0, c = amp.uf;

  LinearizedHypersurfaceGeometry g;
  g.shift = -2.0 * c / r2;
  g.epsbar_vec = -2.0 * c / r2;
  g.epsprime_vec = -2.0 * f / r2;
  g.trchibar_dot = -2.0 / r2 * f - (2.0 * r - 4.0) / r3 * c + 2.0 * lam / r2 * c;
  g.chibarhat_dot = -2.0 * c;
  g.eta_dot = s / r2 * c;
  g.omegabar_dot = -c / r3;
  g.betabar_dot = 3.0 * c / r3;
  g.rho_dot = 3.0 / r4 * f + 3.0 * s / r5 * c;
  g.trchiprime_ddot = 2.0 * (1.0 - s) / r3 * f - 2.0 * s * s / r4 * c + 2.0 * lam / r2 * f;
  g.eta_ddot = s / r2 * c - f / r;
  g.beta_ddot = 3.0 * f / r3;
  return g;
}

InitialGaussCurvatureDelta initial_gauss_two_ways(int l, const ModeAmplitudes& amp) {
  check_degree(l);
  const double lam = eigenvalue(l);
  InitialGaussCurvatureDelta out;
  // metric-variation route at r = 1: (Laplace - 2) of delta_f
  out.from_metric = (lam - 2.0) * amp.f0;
  // linearised Gauss equation at r = 1: the outgoing expansion vanishes on the
  // horizon, so only the incoming-expansion and curvature terms survive.
  const InitialLeafState st = initial_leaf_state(l, amp);
  out.from_gauss_equation = -st.rho0 + 0.5 * st.trchiprime0;
  return out;
}

}  // namespace cmaf
