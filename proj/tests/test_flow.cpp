#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "cmaf/errors.hpp"
#include "cmaf/flow.hpp"
#include "cmaf/sphere.hpp"

using namespace cmaf;

namespace {
const PerturbationKind kBoth[] = {PerturbationKind::case_i, PerturbationKind::case_ii};
}

TEST_CASE("lapse algebra: pinned values") {
  // l = 0 branches
  CHECK(lapse_from_f(0.0, 0.0, 0, pure_amplitudes(PerturbationKind::case_i)) == -1.0);
  CHECK(lapse_from_f(0.0, 1.0, 0, pure_amplitudes(PerturbationKind::case_ii)) == 0.0);
  // case ii l = 1 at the initial leaf
  CHECK(lapse_from_f(0.0, 1.0, 1, pure_amplitudes(PerturbationKind::case_ii)) == 2.5);
  // case ii l = 2 at u = 1 with the exact trajectory value: (3/12 + 1) e^{1/4}
  const double f = closed_form_f(PerturbationKind::case_ii, 2, 1.0);
  CHECK(f == doctest::Approx(2.0 * std::exp(0.25)).epsilon(1e-14));
  CHECK(lapse_from_f(1.0, f, 2, pure_amplitudes(PerturbationKind::case_ii)) ==
        doctest::Approx(1.25 * std::exp(0.25)).epsilon(1e-14));
}

TEST_CASE("closed forms: initial conditions and pinned evaluations") {
  for (int l : {0, 1, 2, 5})
    CHECK(closed_form_f(PerturbationKind::case_i, l, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
  for (int l : {0, 1, 2, 5})
    CHECK(closed_form_f(PerturbationKind::case_ii, l, 0.0) ==
          doctest::Approx(1.0).epsilon(1e-15));
  // case i l = 0 tends to -(1 - 1/r)
  CHECK(closed_form_f(PerturbationKind::case_i, 0, 99.0) ==
        doctest::Approx(-0.99).epsilon(1e-15));
  // case ii keeps l = 0 constant
  CHECK(closed_form_f(PerturbationKind::case_ii, 0, 57.0) == 1.0);
  // case ii l = 2 at u = 1
  CHECK(closed_form_f(PerturbationKind::case_ii, 2, 1.0) ==
        doctest::Approx(2.0 * std::exp(0.25)).epsilon(1e-14));
  // case i l = 1 at u = 1: 16/3 - 5/2 - (4/3) e^{3/4}
  CHECK(closed_form_f(PerturbationKind::case_i, 1, 1.0) ==
        doctest::Approx(16.0 / 3.0 - 2.5 - 4.0 / 3.0 * std::exp(0.75)).epsilon(1e-12));
}

TEST_CASE("evolve: zero range returns the single initial state") {
  const auto traj = evolve_mode(PerturbationKind::case_i, 1, 0.0, 128);
  REQUIRE(traj.size() == 1);
  CHECK(traj[0].u == 0.0);
  CHECK(traj[0].delta_f == 0.0);
  CHECK(traj[0].delta_a == 0.0);
}

TEST_CASE("evolve: guards") {
  CHECK_THROWS_AS(evolve_mode(PerturbationKind::case_i, 1, 10.0, 5), StepError);
  CHECK_THROWS_AS(evolve_mode(PerturbationKind::case_i, 1, 1.0, 0), DomainError);
  CHECK_THROWS_AS(evolve_mode(PerturbationKind::case_i, 1, -1.0, 16), DomainError);
}

TEST_CASE("evolve matches the closed forms at 1024 steps over one radius") {
  const auto t_ii = evolve_mode(PerturbationKind::case_ii, 1, 1.0, 1024);
  CHECK(t_ii.back().delta_f ==
        doctest::Approx(2.0 * std::exp(0.75)).epsilon(1e-9));  // 4.2340000...
  const auto t_i = evolve_mode(PerturbationKind::case_i, 1, 1.0, 1024);
  CHECK(std::abs(t_i.back().delta_f - (16.0 / 3.0 - 2.5 - 4.0 / 3.0 * std::exp(0.75))) < 1e-8);
}

TEST_CASE("evolve matches the closed forms for every case and degree to 1e-9") {
  for (auto kind : kBoth) {
    for (int l = 0; l <= 6; ++l) {
      const auto traj = evolve_mode(kind, l, 10.0, 4096);
      const double exact = closed_form_f(kind, l, 10.0);
      CHECK(std::abs(traj.back().delta_f - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("rk4 convergence order is at least 3.8 over step halvings") {
  for (auto kind : kBoth) {
    for (int l = 0; l <= 6; ++l) {
      const double exact = closed_form_f(kind, l, 10.0);
      std::vector<double> errs;
      for (int n = 32; n <= 512; n *= 2)
        errs.push_back(std::abs(evolve_mode(kind, l, 10.0, n).back().delta_f - exact));
      const double floor = 1e-13 * std::max(1.0, std::abs(exact));
      if (errs.front() <= floor) continue;  // integrator exact for this mode
      double order = 0.0;
      int count = 0;
      for (std::size_t k = 0; k + 1 < errs.size() && errs[k + 1] > floor; ++k) {
        order += std::log2(errs[k] / errs[k + 1]);
        ++count;
      }
      REQUIRE(count > 0);
      CHECK(order / count >= 3.8);
    }
  }
}

TEST_CASE("derived quantities: incoming shear is constant for case i") {
  for (double u : {0.0, 0.5, 3.0, 20.0}) {
    const auto st = closed_form_state(PerturbationKind::case_i, 3, u);
    CHECK(derived_quantities(PerturbationKind::case_i, 3, st).chibarhat == -2.0);
  }
}

TEST_CASE("derived quantities: case ii l = 1 curvature at one radius") {
  const auto st = closed_form_state(PerturbationKind::case_ii, 1, 1.0);
  const auto d = derived_quantities(PerturbationKind::case_ii, 1, st);
  CHECK(d.rho == doctest::Approx(3.0 / 8.0 * std::exp(0.75)).epsilon(1e-13));
}

TEST_CASE("derived quantities: case i l = 0 leaves the geometry invariant") {
  for (double u : {0.0, 1.0, 7.0}) {
    const auto st = closed_form_state(PerturbationKind::case_i, 0, u);
    const auto d = derived_quantities(PerturbationKind::case_i, 0, st);
    CHECK(std::abs(d.mu) < 1e-15);
    CHECK(std::abs(d.rho) < 1e-15);
    CHECK(std::abs(d.rbar) < 1e-15);
    CHECK(std::abs(d.K) < 1e-15);
    CHECK(std::abs(d.omegabar) < 1e-15);
    CHECK(d.betabar == 0.0);
    CHECK(d.beta == 0.0);
    CHECK(d.chibarhat == 0.0);
    CHECK(d.chiprimehat == 0.0);
    CHECK(d.eta == 0.0);
  }
}

TEST_CASE("derived quantities match the per-mode closed-form lists") {
  // case i trajectory-level values, sampled over u for several degrees
  for (int l : {1, 2, 4}) {
    const double lam = eigenvalue(l);
    for (double u : {0.0, 0.7, 3.0, 22.0}) {
      const double r = 1.0 + u;
      const double growth = std::exp(3.0 / lam * (1.0 - 1.0 / r));
      const auto st = closed_form_state(PerturbationKind::case_i, l, u);
      const auto d = derived_quantities(PerturbationKind::case_i, l, st);
      CHECK(st.delta_a == doctest::Approx(lam * (lam + 2.0) / 3.0 - 1.0 / (r * r) -
                                          (lam - 1.0) * (lam / 3.0 + 1.0 / r) * growth)
                              .epsilon(1e-11));
      CHECK(d.trchibar == doctest::Approx(4.0 * lam / (r * r) +
                                          2.0 / (r * r) * (1.0 - lam) * growth)
                              .epsilon(1e-11));
      CHECK(d.eta == doctest::Approx(-3.0 / (r * r) + (lam + 2.0) / r -
                                     (lam - 1.0) / r * growth)
                         .epsilon(1e-11));
      CHECK(d.omegabar ==
            doctest::Approx(-1.5 * (lam - 1.0) / (lam * r * r * r) * growth).epsilon(1e-11));
      CHECK(d.K == doctest::Approx(lam * (lam + 2.0) * (lam - 2.0) / (3.0 * r * r) -
                                   lam * (lam - 2.0) / (r * r * r) -
                                   lam * (lam - 1.0) * (lam - 2.0) / (3.0 * r * r) * growth)
                       .epsilon(1e-10));
      CHECK(d.rho == doctest::Approx(-3.0 * lam / (r * r * r * r) +
                                     lam * (lam + 2.0) / (r * r * r) -
                                     lam * (lam - 1.0) / (r * r * r) * growth)
                         .epsilon(1e-10));
      CHECK(d.betabar == doctest::Approx(3.0 / (r * r * r)).epsilon(1e-13));
      CHECK(d.trchiprime ==
            doctest::Approx(-2.0 * lam / (r * r * r) + 4.0 * lam / (r * r) +
                            2.0 * lam * (lam - 2.0) * (lam + 2.0) / (3.0 * r) -
                            (lam - 1.0) / r *
                                (2.0 / (r * r) + 2.0 * (lam - 1.0) / r +
                                 2.0 / 3.0 * lam * (lam - 2.0)) *
                                growth)
                .epsilon(1e-10));
      CHECK(d.mu == 0.0);
      CHECK(d.rbar == 0.0);
    }
  }
  // case ii, all entries share the growth factor
  for (int l : {1, 3}) {
    const double lam = eigenvalue(l);
    for (double u : {0.0, 1.0, 9.0}) {
      const double r = 1.0 + u;
      const double growth = std::exp(3.0 / lam * (1.0 - 1.0 / r));
      const auto st = closed_form_state(PerturbationKind::case_ii, l, u);
      const auto d = derived_quantities(PerturbationKind::case_ii, l, st);
      CHECK(st.delta_a == doctest::Approx((3.0 / (lam * r) + 1.0) * growth).epsilon(1e-12));
      CHECK(d.gslash == doctest::Approx(2.0 * r * r * growth).epsilon(1e-12));
      CHECK(d.trchibar == doctest::Approx(6.0 / (lam * r * r) * growth).epsilon(1e-12));
      CHECK(d.trchiprime ==
            doctest::Approx((6.0 / (lam * r * r * r) + 6.0 * (lam - 1.0) / (lam * r * r) +
                             (2.0 * lam - 4.0) / r) *
                            growth)
                .epsilon(1e-12));
      CHECK(d.eta == doctest::Approx(3.0 / (lam * r) * growth).epsilon(1e-12));
      CHECK(d.omegabar ==
            doctest::Approx(4.5 / (lam * lam * r * r * r) * growth).epsilon(1e-12));
      CHECK(d.K == doctest::Approx((lam - 2.0) / (r * r) * growth).epsilon(1e-12));
      CHECK(d.rho == doctest::Approx(3.0 / (r * r * r) * growth).epsilon(1e-12));
      CHECK(d.beta == doctest::Approx(3.0 / (r * r) * growth).epsilon(1e-12));
      CHECK(d.chibarhat == 0.0);
      CHECK(d.mu == 0.0);
    }
  }
}

TEST_CASE("residuals vanish on closed-form states") {
  for (auto kind : kBoth) {
    for (int l = 0; l <= 8; ++l) {
      for (double u : {0.0, 0.5, 1.0, 5.0, 50.0}) {
        const auto st = closed_form_state(kind, l, u);
        const auto res = basic_equation_residuals(kind, l, st);
        CHECK(res.max_abs() <= 1e-10);
      }
    }
  }
}

TEST_CASE("residuals: case ii l = 0 mass-aspect propagation") {
  const auto st = closed_form_state(PerturbationKind::case_ii, 0, 3.0);
  const auto d = derived_quantities(PerturbationKind::case_ii, 0, st);
  CHECK(d.mu == doctest::Approx(-3.0 / 256.0).epsilon(1e-14));  // -3 r0^2 / r^4 at r = 4
  const auto res = basic_equation_residuals(PerturbationKind::case_ii, 0, st);
  CHECK(std::abs(res.res_mu_prop) <= 1e-12);
}

TEST_CASE("residuals flag a state with an inflated graph coefficient") {
  for (auto kind : kBoth) {
    for (int l : {1, 2, 5, 8}) {
      auto st = closed_form_state(kind, l, 2.0);
      st.delta_f *= 1.01;
      const auto res = basic_equation_residuals(kind, l, st);
      CHECK(res.max_abs() > 1e-4);
    }
  }
}

TEST_CASE("residuals on rk4 states stay at the closed-form level") {
  for (auto kind : kBoth) {
    const auto traj = evolve_mode(kind, 2, 5.0, 512);
    for (std::size_t k = 0; k < traj.size(); k += 64)
      CHECK(basic_equation_residuals(kind, 2, traj[k]).max_abs() <= 1e-10);
  }
}

TEST_CASE("gauss-curvature delta two ways") {
  // both vanish where the mode leaves the curvature flat
  const auto z1 = gauss_delta_two_ways(PerturbationKind::case_ii, 1,
                                       closed_form_state(PerturbationKind::case_ii, 1, 0.0));
  CHECK(z1.first == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(z1.second == doctest::Approx(0.0).epsilon(1e-14));
  for (double u : {0.0, 2.0, 30.0}) {
    const auto z0 = gauss_delta_two_ways(PerturbationKind::case_i, 0,
                                         closed_form_state(PerturbationKind::case_i, 0, u));
    CHECK(std::abs(z0.first) < 1e-15);
    CHECK(std::abs(z0.second) < 1e-15);
  }
  // nontrivial evaluation at l = 3, u = 2 against the trajectory-level list
  const auto st = closed_form_state(PerturbationKind::case_i, 3, 2.0);
  const auto two = gauss_delta_two_ways(PerturbationKind::case_i, 3, st);
  CHECK(std::abs(two.first - two.second) <= 1e-12);
  const double lam = 12.0, r = 3.0;
  const double growth = std::exp(3.0 / lam * (1.0 - 1.0 / r));
  const double expected = lam * (lam + 2.0) * (lam - 2.0) / (3.0 * r * r) -
                          lam * (lam - 2.0) / (r * r * r) -
                          lam * (lam - 1.0) * (lam - 2.0) / (3.0 * r * r) * growth;
  CHECK(two.first == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("mass aspect and area radius stay unperturbed for every degree above zero") {
  for (auto kind : kBoth) {
    for (int l : {1, 2, 3, 4, 5, 6, 7, 8}) {
      for (double u : {0.0, 1.0, 10.0, 100.0}) {
        const auto st = closed_form_state(kind, l, u);
        const auto d = derived_quantities(kind, l, st);
        CHECK(d.mu == 0.0);
        CHECK(d.rbar == 0.0);
      }
    }
  }
}

TEST_CASE("disjoint modes evolve identically under concurrent evaluation") {
  std::vector<std::vector<ModeState>> parallel(6);
  std::vector<std::thread> threads;
  for (int l = 1; l <= 6; ++l)
    threads.emplace_back([&parallel, l] {
      parallel[l - 1] = evolve_mode(PerturbationKind::case_ii, l, 4.0, 256);
    });
  for (auto& t : threads) t.join();
  for (int l = 1; l <= 6; ++l) {
    const auto serial = evolve_mode(PerturbationKind::case_ii, l, 4.0, 256);
    REQUIRE(parallel[l - 1].size() == serial.size());
    for (std::size_t k = 0; k < serial.size(); ++k)
      CHECK(parallel[l - 1][k].delta_f == serial[k].delta_f);
  }
}
