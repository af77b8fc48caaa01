#include "cmaf/oracles.hpp"

#include <cmath>

#include "cmaf/errors.hpp"

namespace cmaf {
namespace oracles {

double bisection_radius(double s, double sbar, double tol) {
  if (!(s > -1.0)) throw DomainError("bisection_radius: require s > -r0");
  if (s == 0.0) return 1.0;
  const double rhs = s * std::exp(sbar + s + 1.0);
  auto rel = [&](double r) { return (r - 1.0) * std::exp(r) - rhs; };
  double lo, hi;
  if (s > 0.0) {
    lo = 1.0;
    hi = 2.0 + s + std::abs(sbar);
    while (rel(hi) < 0.0) hi *= 2.0;
  } else {
    if (rhs <= -1.0) throw DomainError("bisection_radius: outside the chart");
    lo = 1e-15;
    hi = 1.0;
  }
  for (int it = 0; it < 400 && hi - lo > tol * std::max(1.0, lo); ++it) {
    const double mid = 0.5 * (lo + hi);
    (rel(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
  if (intervals < 2) throw DomainError("simpson: need at least 2 intervals");
  const int n = intervals % 2 == 0 ? intervals : intervals + 1;
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

namespace {

// fourth-order central stencils in one variable
double d1(const std::function<double(double)>& g, double x, double h) {
  return (-g(x + 2 * h) + 8 * g(x + h) - 8 * g(x - h) + g(x - 2 * h)) / (12 * h);
}
double d2(const std::function<double(double)>& g, double x, double h) {
  return (-g(x + 2 * h) + 16 * g(x + h) - 30 * g(x) + 16 * g(x - h) - g(x - 2 * h)) /
         (12 * h * h);
}
double d3(const std::function<double(double)>& g, double x, double h) {
  return (g(x - 3 * h) - 8 * g(x - 2 * h) + 13 * g(x - h) - 13 * g(x + h) +
          8 * g(x + 2 * h) - g(x + 3 * h)) /
         (8 * h * h * h);
}

double partial_theta(const AngularFn& f, double theta, double phi, int order, double h) {
  auto g = [&](double t) { return f(t, phi); };
  switch (order) {
    case 0: return f(theta, phi);
    case 1: return d1(g, theta, h);
    case 2: return d2(g, theta, h);
    default: return d3(g, theta, h);
  }
}

}  // namespace

double fd_partial(const AngularFn& f, double theta, double phi, int a, int b, double h) {
  if (a < 0 || b < 0 || a + b > 3) throw DomainError("fd_partial: order out of range");
  auto in_phi = [&](double p) { return partial_theta(f, theta, p, a, h); };
  switch (b) {
    case 0: return in_phi(phi);
    case 1: return d1(in_phi, phi, h);
    case 2: return d2(in_phi, phi, h);
    default: return d3(in_phi, phi, h);
  }
}

double fd_laplacian(const AngularFn& f, double theta, double phi, double h) {
  const double st = std::sin(theta), ct = std::cos(theta);
  return fd_partial(f, theta, phi, 2, 0, h) + ct / st * fd_partial(f, theta, phi, 1, 0, h) +
         fd_partial(f, theta, phi, 0, 2, h) / (st * st);
}

std::array<double, 2> fd_gradient(const AngularFn& f, double theta, double phi, double h) {
  return {fd_partial(f, theta, phi, 1, 0, h), fd_partial(f, theta, phi, 0, 1, h)};
}

std::array<double, 2> fd_div_tracefree_hessian(const AngularFn& f, double theta, double phi,
                                               double h) {
  // T = covariant Hessian minus half the metric times the Laplacian; with
  // T_pp = -sin^2 T_tt the divergence covector reduces to
  //   (div T)_t = dt T_tt + dp T_tp / sin^2 + 2 cot T_tt
  //   (div T)_p = dt T_tp + cot T_tp - dp T_tt
  const double st = std::sin(theta), ct = std::cos(theta);
  const double cot = ct / st, inv_s2 = 1.0 / (st * st);

  const double f_t = fd_partial(f, theta, phi, 1, 0, h);
  const double f_p = fd_partial(f, theta, phi, 0, 1, h);
  const double f_tt = fd_partial(f, theta, phi, 2, 0, h);
  const double f_tp = fd_partial(f, theta, phi, 1, 1, h);
  const double f_pp = fd_partial(f, theta, phi, 0, 2, h);
  const double f_ttt = fd_partial(f, theta, phi, 3, 0, h);
  const double f_ttp = fd_partial(f, theta, phi, 2, 1, h);
  const double f_tpp = fd_partial(f, theta, phi, 1, 2, h);
  const double f_ppp = fd_partial(f, theta, phi, 0, 3, h);

  // T_tt = (f_tt - cot f_t - f_pp / sin^2) / 2,   T_tp = f_tp - cot f_p
  const double T_tt = 0.5 * (f_tt - cot * f_t - inv_s2 * f_pp);
  const double T_tp = f_tp - cot * f_p;
  const double dcot = -1.0 - cot * cot;          // d/dtheta cot
  const double dinv_s2 = -2.0 * cot * inv_s2;    // d/dtheta 1/sin^2
  const double dT_tt_dt =
      0.5 * (f_ttt - dcot * f_t - cot * f_tt - dinv_s2 * f_pp - inv_s2 * f_tpp);
  const double dT_tt_dp = 0.5 * (f_ttp - cot * f_tp - inv_s2 * f_ppp);
  const double dT_tp_dt = f_ttp - dcot * f_p - cot * f_tp;
  const double dT_tp_dp = f_tpp - cot * f_pp;

  return {dT_tt_dt + inv_s2 * dT_tp_dp + 2.0 * cot * T_tt,
          dT_tp_dt + cot * T_tp - dT_tt_dp};
}

}  // namespace oracles
}  // namespace cmaf
